import sympy
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def to_sympy(value):
    """Independent reading of an exact value's text form (eps becomes a symbol)."""
    text = str(value).replace("^", "**")
    return sympy.sympify(text, locals={"eps": sympy.Symbol("eps", positive=True)})
