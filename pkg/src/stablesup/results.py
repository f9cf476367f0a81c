from dataclasses import dataclass, field


@dataclass(frozen=True)
class EvalResult:
    """A computed scalar together with how it was obtained.

    ``abs_err`` is the evaluator's own error estimate; ``rel_err`` is that
    estimate divided by ``|value|`` (``inf`` when ``value`` is zero).
    """

    value: float
    method: str
    abs_err: float = 0.0
    diagnostics: dict = field(default_factory=dict)

    @property
    def rel_err(self):
        if self.value == 0.0:
            return float("inf")
        return self.abs_err / abs(self.value)

    def __float__(self):
        return float(self.value)
