"""
Точные вероятности и неточные вероятности-интервалы

Вероятность представлена Fraction (всегда в несократимом виде), неточная
вероятность - замкнутым интервалом [lower, upper] внутри [0, 1].
"""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import BadInterval, InvalidProbability

Prob = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_prob(value):
    """
    Преобразует литерал в точную вероятность

    Десятичные литералы переводятся точно: "0.6" -> 3/5.

    Args:
        value (str | int | Fraction): Литерал вида "3/5", "0.6", "1"

    Returns:
        Fraction: Вероятность в [0, 1]

    Raises:
        InvalidProbability: Если значение вне [0, 1] или не число
    """
    if isinstance(value, float):
        raise TypeError("Вероятность задаётся точно: используйте str или Fraction, а не float")
    try:
        prob = Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise InvalidProbability(value) from None
    if prob < 0 or prob > 1:
        raise InvalidProbability(value)
    return prob


def format_prob(prob):
    """Запись "num/den", в том числе для целых: 1 -> "1/1" """
    prob = Fraction(prob)
    return f"{prob.numerator}/{prob.denominator}"


def short_prob(prob):
    """Краткая запись для текста процессов и типов: 3/5, 1, 0"""
    prob = Fraction(prob)
    if prob.denominator == 1:
        return str(prob.numerator)
    return f"{prob.numerator}/{prob.denominator}"


@dataclass(frozen=True)
class Interval:
    """
    Неточная вероятность [lower, upper], 0 <= lower <= upper <= 1

    Операция & даёт пересечение интервалов (None, если оно пусто).
    """

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        lower, upper = Fraction(self.lower), Fraction(self.upper)
        if not (0 <= lower <= upper <= 1):
            raise BadInterval(self.lower, self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @staticmethod
    def point(prob):
        """Вырожденный интервал [p, p]"""
        return Interval(prob, prob)

    @staticmethod
    def full():
        """Интервал [0, 1]"""
        return Interval(ZERO, ONE)

    def is_point(self):
        return self.lower == self.upper

    def __contains__(self, prob):
        return self.lower <= prob <= self.upper

    def __and__(self, other):
        if not isinstance(other, Interval):
            raise TypeError("Пересекать можно только с Interval")
        lower = max(self.lower, other.lower)
        upper = min(self.upper, other.upper)
        if lower > upper:
            return None
        return Interval(lower, upper)

    def widen(self, margin):
        """Расширяет интервал на margin с каждой стороны, не выходя за [0, 1]"""
        margin = Fraction(margin)
        return Interval(max(ZERO, self.lower - margin), min(ONE, self.upper + margin))

    def __str__(self):
        return f"[{short_prob(self.lower)},{short_prob(self.upper)}]"

    def __repr__(self):
        return f"Interval({self})"
