"""
ReferenceValues — опубликованные значения ошибок для сравнения.

## Бизнес-контекст
Воспроизводимые таблицы: сходимость на exp-decay, пружинный осциллятор
при −λ₁τ = 2.785 (шаг 2/1437), задача Лоренца при τ ∈ {0.04, 0.0625, 0.01}.
Ключи: (C или "rk4", τ0 / τ), значения — строки таблицы.
"""

import math
from typing import Optional

# exp-decay: C → (τ0, [(err, order)] для τ0/2^k, k = 0..5)
CONVERGENCE_TABLE: dict[float, tuple[float, list[tuple[float, Optional[float]]]]] = {
    0.0: (
        2.7,
        [
            (1.3291e01, None),
            (3.6366e-01, 5.1917),
            (1.1691e-02, 4.9591),
            (5.5332e-04, 4.4011),
            (3.0414e-05, 4.1853),
            (1.7974e-06, 4.0807),
        ],
    ),
    0.5: (
        5.8,
        [
            (3.9039e01, None),
            (5.1269e00, 2.9287),
            (1.5732e-01, 5.0263),
            (6.7895e-03, 4.5343),
            (3.6496e-04, 4.2175),
            (2.0228e-05, 4.1733),
        ],
    ),
    1.0: (
        3.2,
        [
            (2.4742e01, None),
            (1.7886e-01, 7.1120),
            (3.6257e-03, 5.6244),
            (8.0248e-05, 5.4976),
            (2.1109e-06, 5.2486),
            (6.0532e-08, 5.1240),
        ],
    ),
}

# spring: шаг τ = 2/1437 (1437 шагов до t = 2)
SPRING_STEPS_PER_TWO = 1437
SPRING_TABLE: dict[float, list[tuple[float, int, float, float]]] = {
    0.5: [
        (2.0, 1437, 2.571e-14, 2.604e-14),
        (4.0, 2874, 1.938e-13, 1.938e-13),
        (6.0, 4311, 2.325e-13, 2.325e-13),
        (8.0, 5748, 6.518e-13, 6.518e-13),
        (10.0, 7185, 1.072e-12, 1.072e-12),
        (12.0, 8622, 1.492e-12, 1.492e-12),
        (14.0, 10059, 1.909e-12, 1.910e-12),
        (16.0, 11496, 2.327e-12, 2.327e-12),
    ],
    1.0: [
        (2.0, 1437, 5.746e-14, 5.746e-14),
        (4.0, 2874, 1.373e-13, 1.376e-13),
        (6.0, 4311, 3.114e-13, 3.113e-13),
        (8.0, 5748, 7.596e-13, 7.591e-13),
        (10.0, 7185, 1.209e-12, 1.209e-12),
        (12.0, 8622, 1.655e-12, 1.655e-12),
        (14.0, 10059, 2.105e-12, 2.105e-12),
        (16.0, 11496, 2.555e-12, 2.555e-12),
    ],
}

# lorenz: (метод, τ) → 10 строк (err x, err y, err z) при t = 1..10
LORENZ_TABLES: dict[tuple[str, float], list[tuple[float, float, float]]] = {
    ("0", 0.04): [
        (6.7015e-02, 2.9769e-03, 9.9755e-02),
        (1.7809e-01, 2.0776e-01, 4.4027e-02),
        (1.8387e-02, 5.9763e-03, 6.1340e-02),
        (4.5944e-02, 3.8950e-02, 2.0328e-02),
        (2.5444e-02, 2.5753e-02, 1.3452e-03),
        (7.0759e-03, 8.7117e-03, 3.1256e-03),
        (6.7926e-04, 3.1301e-04, 2.2993e-03),
        (1.8880e-03, 1.5924e-03, 8.2682e-04),
        (1.0623e-03, 1.0787e-03, 5.1666e-05),
        (2.8804e-04, 3.5932e-04, 1.3760e-04),
    ],
    ("0", 0.01): [
        (2.0257e-05, 1.7648e-05, 4.4321e-06),
        (3.0170e-06, 5.8543e-06, 7.1119e-06),
        (6.5192e-06, 4.9609e-06, 4.4250e-06),
        (6.0860e-06, 5.8296e-06, 1.0720e-06),
        (2.9386e-06, 3.2706e-06, 5.3503e-07),
        (4.1393e-07, 7.6983e-07, 7.7225e-07),
        (5.5782e-07, 3.8339e-07, 4.4008e-07),
        (5.3004e-07, 5.0065e-07, 1.1080e-07),
        (2.3573e-07, 2.6121e-07, 3.8009e-08),
        (3.0994e-08, 5.6925e-08, 5.6218e-08),
    ],
    ("0.5", 0.0625): [
        (9.3319e-02, 3.2845e-02, 5.7565e-02),
        (9.1353e-02, 1.1158e-01, 3.7513e-02),
        (2.1367e-02, 9.4735e-03, 3.4155e-02),
        (2.7067e-02, 2.4241e-02, 9.1287e-03),
        (1.2676e-02, 1.3233e-02, 2.5175e-04),
        (2.8142e-03, 3.7420e-03, 1.8532e-03),
        (6.7871e-04, 2.0339e-04, 1.1253e-03),
        (9.6442e-04, 8.4702e-04, 3.4594e-04),
        (4.7010e-04, 4.8793e-04, 1.1421e-06),
        (1.0853e-04, 1.4200e-04, 6.6884e-05),
    ],
    ("0.5", 0.01): [
        (2.0617e-06, 3.7958e-06, 4.2273e-06),
        (4.8728e-06, 7.8086e-06, 6.0057e-06),
        (4.9381e-06, 3.3219e-06, 4.0089e-06),
        (4.6001e-06, 4.3271e-06, 1.0246e-06),
        (2.2045e-06, 2.4134e-06, 2.9472e-07),
        (3.6937e-07, 6.0478e-07, 5.0476e-07),
        (3.2916e-07, 2.1215e-07, 2.9230e-07),
        (3.3149e-07, 3.0952e-07, 7.7360e-08),
        (1.5024e-07, 1.6457e-07, 1.9940e-08),
        (2.2575e-08, 3.8093e-08, 3.3305e-08),
    ],
    ("1", 0.04): [
        (1.5361e-03, 1.9805e-03, 6.4616e-03),
        (8.5945e-03, 1.3262e-02, 7.0901e-03),
        (4.9792e-03, 3.1234e-03, 4.8734e-03),
        (4.4063e-03, 4.1019e-03, 1.1500e-03),
        (1.9307e-03, 2.0774e-03, 1.7791e-04),
        (3.4475e-04, 5.1191e-04, 3.5437e-04),
        (1.8519e-04, 1.0561e-04, 1.9561e-04),
        (1.9198e-04, 1.7594e-04, 5.2216e-05),
        (8.5114e-05, 9.1504e-05, 7.3770e-06),
        (1.4865e-05, 2.2347e-05, 1.5720e-05),
    ],
    ("1", 0.01): [
        (1.6156e-05, 1.0065e-05, 4.0029e-06),
        (6.7043e-06, 9.7256e-06, 4.8799e-06),
        (3.3433e-06, 1.6740e-06, 3.5795e-06),
        (3.1021e-06, 2.8133e-06, 9.7422e-07),
        (1.4654e-06, 1.5507e-06, 5.3838e-08),
        (3.2398e-07, 4.3844e-07, 2.3630e-07),
        (9.9956e-08, 4.0592e-08, 1.4400e-07),
        (1.3241e-07, 1.1792e-07, 4.3785e-08),
        (6.4516e-08, 6.7691e-08, 1.8473e-09),
        (1.4119e-08, 1.9205e-08, 1.0349e-08),
    ],
    ("rk4", 0.04): [
        (4.2184e-02, 2.3244e-02, 2.1487e-02),
        (2.1815e-02, 3.3483e-02, 2.3926e-02),
        (1.7573e-02, 1.3117e-02, 1.3310e-02),
        (1.3504e-02, 1.2992e-02, 2.3494e-03),
        (5.1771e-03, 5.8316e-03, 1.0917e-03),
        (4.3010e-04, 9.9634e-04, 1.2432e-03),
        (8.7431e-04, 6.4763e-04, 5.8343e-04),
        (6.6585e-04, 6.4333e-04, 1.0654e-04),
        (2.4192e-04, 2.7694e-04, 5.9139e-05),
        (1.1922e-05, 3.9662e-05, 6.1925e-05),
    ],
    ("rk4", 0.01): [
        (4.0999e-05, 2.2965e-05, 8.8756e-06),
        (1.0701e-05, 1.6094e-05, 1.0973e-05),
        (8.9941e-06, 6.7554e-06, 7.6197e-06),
        (8.8726e-06, 8.4220e-06, 1.7920e-06),
        (4.1519e-06, 4.5617e-06, 6.5426e-07),
        (6.1669e-07, 1.0786e-06, 9.9454e-07),
        (6.7845e-07, 4.5406e-07, 5.6068e-07),
        (6.4966e-07, 6.1090e-07, 1.4192e-07),
        (2.8740e-07, 3.1716e-07, 4.3333e-08),
        (3.9208e-08, 6.9809e-08, 6.6129e-08),
    ],
}


def method_key(method: str, c: Optional[float]) -> str:
    """Ключ метода для таблиц Лоренца: 'rk4' или значение C ('0', '0.5', '1')."""
    if method == "rk4" or c is None:
        return "rk4"
    return f"{c:g}"


def convergence_reference(c: float, tau0: float, level: int) -> Optional[tuple[float, Optional[float]]]:
    """(err, order) строки таблицы сходимости или None, если строки нет."""
    entry = CONVERGENCE_TABLE.get(c)
    if entry is None or not math.isclose(entry[0], tau0) or level >= len(entry[1]):
        return None
    return entry[1][level]


def spring_reference(c: float, t: float) -> Optional[tuple[float, float]]:
    for t_ref, _, err_p, err_q in SPRING_TABLE.get(c, []):
        if math.isclose(t_ref, t, abs_tol=1e-9):
            return err_p, err_q
    return None


def lorenz_reference(method: str, c: Optional[float], tau: float, t: float) -> Optional[tuple[float, float, float]]:
    for (key, tau_ref), rows in LORENZ_TABLES.items():
        if key == method_key(method, c) and math.isclose(tau_ref, tau):
            k = round(t)
            if math.isclose(k, t, abs_tol=1e-9) and 1 <= k <= len(rows):
                return rows[k - 1]
    return None
