"""Embedded 30-study elasticity survey, stored verbatim as published.

Each row keeps the published cell strings exactly as printed: commodity,
eta_p, eta_i, ratio (eta_p/eta_i), error (ratio - 1), source citation.
Numeric values are parsed from these strings at load time, so the printed
precision (which varies from cell to cell) survives for archival rendering.

Two rows (Sugar USA and Cereal USA) are internally inconsistent as
published: the printed ratio sign disagrees with eta_p/eta_i.  They are
stored exactly as published; reconciliation lives in the analysis layer,
never here.
"""

from __future__ import annotations

EMBEDDED_ROWS: tuple[tuple[str, str, str, str, str, str], ...] = (
    ("Non-organic potatoes", "1.54", "-0.18", "-8.56", "-9.56", "Trost, 1999"),
    ("Organic onions", "-1.56", "0.32", "-4.88", "-5.88", "Trost, 1999"),
    ("Frozen dessert products", "-0.356", "0.08", "-4.45", "-5.45", "Kaiser & Forker, 1993"),
    ("Oranges in South Africa", "-1.55", "0.407", "-3.81", "-4.81", "Hayward-Butt & Ortmann, 1994"),
    ("Organic vegetables in Taiwan", "-0.152", "0.04", "-3.80", "-4.80", "Huang-Zheng and Lin, 2011"),
    ("Real estate services", "-1.20", "0.40", "-3.00", "-4.00", "Bates & Santerre, 2016"),
    ("Poultry, USA", "-1.313", "0.659", "-1.99", "-2.99", "Young, 1990"),
    ("Pork, USA", "-0.854", "0.507", "-1.68", "-2.68", "Young, 1990"),
    ("Theatre tickets in Switzerland", "0.3", "-0.2", "-1.50", "-2.50", "Zieba, 2016"),
    ("Theatre tickets in Austria", "0.7", "-0.5", "-1.40", "-2.40", "Zieba, 2016"),
    ("Vegetables, USA", "-0.421", "0.313", "-1.35", "-2.35", "Young, 1990"),
    ("Eggs in South Africa", "-0.55", "0.41", "-1.34", "-2.34", "Cleasby and Ortmann, 1991"),
    ("Standard cheese in Norway", "-1.009", "1.121", "-0.90", "-1.90", "Sooriyakumar, 2003"),
    ("Tea in Iran", "-0.42", "0.53", "-0.79", "-1.79", "Fallah Alipour, Kavooosi Kalashami and Ahmedzedah, 2019"),
    ("Jam in Peshawar", "-0.46", "0.64", "-0.72", "-1.72", "Khanum et al., 2007"),
    ("Cigarettes in Bangladesh", "0.39", "-0.62", "-0.63", "-1.63", "Ahmed et al., 2022"),
    ("Beer", "-0.3", "0.5", "-0.60", "-1.60", "Nelson, 2013"),
    ("Public bus transport", "-0.59", "1.05", "-0.56", "-1.56", "Holmgren, 2007"),
    ("Spirits", "-0.55", "1", "-0.55", "-1.55", "Nelson, 2013"),
    ("Wine", "-0.45", "1", "-0.45", "-1.45", "Nelson, 2013"),
    ("Durable goods", "-0.49", "1.35", "-0.36", "-1.36", "Wong & McDermott, 1990"),
    ("Sugar, USA", "-0.294", "0.898", "0.33", "-0.67", "Young, 1990"),
    ("Milk in Indonesia", "1.32", "1.84", "0.72", "-0.28", "Forgenie, Khoiriyah and Elbaar, 2023"),
    ("Beef in Indonesia", "1.71", "2.2", "0.78", "-0.22", "Forgenie, Khoiriyah and Elbaar, 2023"),
    ("Fish, USA", "2.124", "2.616", "0.81", "-0.19", "Young, 1990"),
    ("Poultry in Indonesia", "1.39", "1.44", "0.97", "-0.03", "Forgenie, Khoiriyah and Elbaar, 2023"),
    ("Fish in Indonesia", "1.11", "1.07", "1.04", "0.04", "Forgenie, Khoiriyah and Elbaar, 2023"),
    ("Cereal, USA", "-0.045", "0.029", "1.55", "0.55", "Young, 1990"),
    ("Dairy, USA", "0.645", "0.21", "3.07", "2.07", "Young, 1990"),
    ("Non-organic onions", "1.84", "0.25", "7.36", "6.36", "Trost, 1999"),
)
