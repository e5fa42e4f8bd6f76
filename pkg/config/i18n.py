"""
Internationalization (i18n) module.

Provides translation support for multiple languages.
"""

from typing import Dict

from .settings import CURRENT_LANGUAGE, SUPPORTED_LANGUAGES

# ─────────────────────────────────────────────────────────────────────────────
# Language Translations
# ─────────────────────────────────────────────────────────────────────────────

LANG: Dict[str, Dict[str, str]] = {
    "ru": {
        # ── Errors ──
        "err_file_unreadable": "Не удалось прочитать {path}: {error}",
        "err_negative_k": "k должно быть неотрицательным",
        "err_invalid_input": "Некорректные входные данные: {error}",
        "err_invalid_settings": "Некорректные параметры: {error}",
        "err_verify_guard": "Экземпляр слишком велик для полного перебора (n*m = {cells} > {limit})",
        "err_missing_deps": "Не установлены зависимости:",
        "install_deps_hint": "Установите их командой:",
        # ── Verify ──
        "verify_ok": "Отчёты совпадают ({count} выравниваний)",
        "verify_mismatch": "Отчёты различаются в {count} выравниваниях",
        "verify_title": "Расхождения с эталоном",
        # ── Gen / decode ──
        "gen_written": "Записаны {text} и {pattern}",
        "decode_written": "Произведение матриц записано в {path}",
        # ── Bench ──
        "bench_title": "Замеры производительности",
        "bench_written": "Записано строк: {rows} в {path}",
        "bench_skipped": "Пропуск {algorithm} (n={n}, k={k}): превышен бюджет работы",
        # ── Table columns ──
        "col_position": "Позиция",
        "col_expected": "Эталон",
        "col_actual": "Алгоритм",
        "col_algorithm": "Алгоритм",
        "col_instances": "Экземпляров",
        "col_total_ms": "Всего, мс",
        "col_max_ms": "Макс, мс",
    },
    "en": {
        # ── Errors ──
        "err_file_unreadable": "Cannot read {path}: {error}",
        "err_negative_k": "k must be non-negative",
        "err_invalid_input": "Invalid input: {error}",
        "err_invalid_settings": "Invalid parameters: {error}",
        "err_verify_guard": "Instance too large for the brute-force oracle (n*m = {cells} > {limit})",
        "err_missing_deps": "Missing dependencies:",
        "install_deps_hint": "Install them with:",
        # ── Verify ──
        "verify_ok": "Reports identical ({count} alignments)",
        "verify_mismatch": "Reports differ at {count} alignments",
        "verify_title": "Differences from the oracle",
        # ── Gen / decode ──
        "gen_written": "Wrote {text} and {pattern}",
        "decode_written": "Matrix product written to {path}",
        # ── Bench ──
        "bench_title": "Benchmark",
        "bench_written": "Wrote {rows} rows to {path}",
        "bench_skipped": "Skipped {algorithm} (n={n}, k={k}): work budget exceeded",
        # ── Table columns ──
        "col_position": "Position",
        "col_expected": "Oracle",
        "col_actual": "Algorithm",
        "col_algorithm": "Algorithm",
        "col_instances": "Instances",
        "col_total_ms": "Total ms",
        "col_max_ms": "Max ms",
    },
}


def t(key: str) -> str:
    """Get translation for key in current language."""
    return LANG.get(CURRENT_LANGUAGE, LANG["en"]).get(key, key)
