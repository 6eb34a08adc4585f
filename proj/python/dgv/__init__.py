from _dgv import *  # noqa: F401,F403

__all__ = [
    "DoubleGroupoid",
    "build",
    "from_json",
    "validate",
    "filling",
    "pi",
    "theorem_51",
    "theorem_53",
    "theorem_63",
    "reflect_dec_nerve",
    "verify_theorems",
    "verify_formulas",
]
