"""
Детерминированный генератор случайных чисел для моделирования

Каждая трасса получает собственный генератор numpy.random.Philox с ключом
(trial << 64) | seed, поэтому результат трассы зависит только от пары
(seed, номер трассы) и не зависит от порядка их выполнения.
"""

import math

import numpy as np

_WORD = 1 << 64


class TrialRNG:
    """Генератор одной трассы моделирования"""

    def __init__(self, seed, trial):
        self._seed = seed % _WORD
        self._trial = trial
        self._bits = np.random.Philox(key=(trial << 64) | self._seed)
        self._generator = np.random.Generator(self._bits)

    @property
    def seed(self):
        return self._seed

    @property
    def trial(self):
        return self._trial

    def below(self, bound):
        """
        Равномерное целое из [0, bound)

        Для границ, не помещающихся в int64, значение собирается из 64-битных
        слов с отбраковкой.
        """
        if bound < 1:
            raise ValueError(f"Граница должна быть положительной: {bound}")
        if bound < (1 << 63):
            return int(self._generator.integers(0, bound))
        words = (bound.bit_length() + 63) // 64
        span = _WORD ** words
        limit = span - span % bound
        while True:
            value = 0
            for _ in range(words):
                value = (value << 64) | int(self._bits.random_raw())
            if value < limit:
                return value % bound

    def choose(self, weights):
        """
        Индекс, выбранный с точными рациональными весами (сумма весов равна 1)

        Args:
            weights (list[Fraction]): Вероятности вариантов
        """
        denominator = math.lcm(*(w.denominator for w in weights))
        point = self.below(denominator)
        acc = 0
        for index, weight in enumerate(weights):
            acc += weight.numerator * (denominator // weight.denominator)
            if point < acc:
                return index
        return len(weights) - 1
