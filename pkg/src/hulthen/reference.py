"""
Published reference energies for the Hulthen potential (Z = 1, atomic units).

TABLE_I holds the closed-form energies as printed, columns
(NU C0=0, NU C0=1/12, SUSY C0=0, SUSY C0=1/12). TABLE_II holds magnitudes
from other methods as printed: asymptotic iteration (AIM), a SUSY
hierarchy calculation, numerical integration, and a variational
calculation. Values are kept as printed strings so the printed precision
survives; ``None`` marks an empty cell. Source tags name the method behind
each Table II column.
"""

from __future__ import annotations

from dataclasses import dataclass

TABLE_I_COLUMNS = ("nu_c0_0", "nu_c0_1/12", "susy_c0_0", "susy_c0_1/12")

# (state, delta, NU C0=0, NU C0=1/12, SUSY C0=0, SUSY C0=1/12)
TABLE_I = [
    ("2p", 0.025, "-0.1128125", "-0.1127604", "-0.1128125", "-0.1127604"),
    ("2p", 0.050, "-0.1012500", "-0.10104166", "-0.1012500", "-0.10104166"),
    ("2p", 0.075, "-0.0903125", "-0.08984375", "-0.0903125", "-0.08984375"),
    ("2p", 0.10, "-0.080000", "-0.07916666", "-0.080000", "-0.07916666"),
    ("2p", 0.150, "-0.0612500", "-0.059375", "-0.0612500", "-0.059375"),
    ("2p", 0.200, "-0.45000", "-0.0416666", "-0.45000", "-0.0416666"),
    ("2p", 0.250, "-0.0312500", "-0.02604166", "-0.0312500", "-0.02604166"),
    ("2p", 0.300, "-0.02000", "-0.012500", "-0.02000", "-0.012500"),
    ("2p", 0.350, "-0.01125", "-0.00104166", "-0.01125", "-0.00104166"),
    ("3p", 0.025, "-0.04375868", "-0.04370659", "-0.04375868", "-0.04370659"),
    ("3p", 0.050, "-0.03336805", "-0.03315972", "-0.03336805", "-0.03315972"),
    ("3p", 0.075, "-0.02438737", "-0.0239149305", "-0.02438737", "-0.0239149305"),
    ("3p", 0.100, "-0.01680555", "-0.015972222", "-0.01680555", "-0.015972222"),
    ("3p", 0.150, "-0.00586805", "-0.003993055", "-0.00586805", "-0.003993055"),
    ("3d", 0.025, "-0.04375868", "-0.04370659", "-0.04375868", "-0.04370659"),
    ("3d", 0.050, "-0.03336805", "-0.03315972", "-0.03336805", "-0.03315972"),
    ("3d", 0.075, "-0.02438737", "-0.0239149305", "-0.02438737", "-0.0239149305"),
    ("3d", 0.100, "-0.01680555", "-0.015972222", "-0.01680555", "-0.015972222"),
    ("3d", 0.150, "-0.00586805", "-0.003993055", "-0.00586805", "-0.003993055"),
    ("4p", 0.025, "-0.02000", "-0.0199478", "-0.02000", "-0.0199478"),
    ("4p", 0.050, "-0.01125", "-0.011041666", "-0.01125", "-0.011041666"),
    ("4p", 0.075, "-0.00500", "-0.00453125", "-0.00500", "-0.00453125"),
    ("4p", 0.100, "-0.00125", "-0.00041666", "0.00125", "-0.00041666"),
    ("4d", 0.025, "-0.02000", "-0.0199478", "-0.02000", "-0.0199478"),
    ("4d", 0.050, "-0.01125", "-0.011041666", "-0.01125", "-0.011041666"),
    ("4d", 0.075, "-0.00500", "-0.00453125", "-0.00500", "-0.00453125"),
    ("4f", 0.025, "-0.02000", "-0.0199478", "-0.02000", "-0.0199478"),
    ("4f", 0.050, "-0.01125", "-0.011041666", "-0.01125", "-0.011041666"),
    ("4f", 0.075, "-0.00500", "-0.00453125", "-0.00500", "-0.00453125"),
    ("5p", 0.025, "-0.009453125", "-0.009401", "-0.009453125", "-0.009401"),
    ("5p", 0.050, "-0.0028125", "-0.00260416", "-0.0028125", "-0.00260416"),
    ("5d", 0.025, "-0.009453125", "-0.009401", "-0.009453125", "-0.009401"),
    ("5d", 0.050, "-0.0028125", "-0.00260416", "-0.0028125", "-0.00260416"),
    ("5f", 0.025, "-0.009453125", "-0.009401", "-0.009453125", "-0.009401"),
    ("5f", 0.050, "-0.0028125", "-0.00260416", "-0.0028125", "-0.00260416"),
    ("5g", 0.025, "-0.009453125", "-0.009401", "-0.009453125", "-0.009401"),
    ("5g", 0.050, "-0.0028125", "-0.00260416", "-0.0028125", "-0.00260416"),
    ("6p", 0.025, "-0.00420138", "-0.004149305", "-0.00420138", "-0.004149305"),
    ("6d", 0.025, "-0.00420138", "-0.004149305", "-0.00420138", "-0.004149305"),
    ("6g", 0.025, "-0.00420138", "-0.004149305", "-0.00420138", "-0.004149305"),
]

# Cells whose printed value is a known misprint of the closed form:
# a dropped digit (2p, 0.200) and a flipped sign (4p, 0.100, SUSY C0=0).
FLAGGED_MISPRINTS = {
    ("2p", 0.200, "nu_c0_0"),
    ("2p", 0.200, "susy_c0_0"),
    ("4p", 0.100, "susy_c0_0"),
}

TABLE_II_COLUMNS = ("aim", "susy_ref", "numerical", "variational")
TABLE_II_SOURCES = {
    "aim": "asymptotic iteration method",
    "susy_ref": "SUSY QM Hamiltonian hierarchy",
    "numerical": "numerical integration",
    "variational": "variational method",
}

# (state, delta, AIM, SUSY-ref, Numerical, Variational); all magnitudes
TABLE_II = [
    ("2p", 0.025, "0.1128125", "0.1127605", "0.1127605", "0.1127605"),
    ("2p", 0.050, "0.1012500", "0.1010425", "0.1010425", "0.1010425"),
    ("2p", 0.075, "0.0903125", "0.0898478", "0.0898478", "0.0898478"),
    ("2p", 0.10, "0.0800000", "0.0791794", "0.0791794", "0.0791794"),
    ("2p", 0.150, "0.0612500", "0.0594415", "0.0594415", "0.0594415"),
    ("2p", 0.200, "0.450000", "0.0418854", "0.0418860", "0.0418860"),
    ("2p", 0.250, "0.0312500", "0.0266060", "0.0266111", "0.0266108"),
    ("2p", 0.300, "0.0200000", "0.0137596", "0.0137900", "0.0137878"),
    ("2p", 0.350, "0.0112500", "0.0036146", "0.0037931", "0.0037734"),
    ("3p", 0.025, "0.0437590", "0.0437068", "0.0437069", "0.0437069"),
    ("3p", 0.050, "0.0333681", "0.0331632", "0.0331645", "0.0331645"),
    ("3p", 0.075, "0.0243837", "0.0239331", "0.0239397", "0.0239397"),
    ("3p", 0.100, "0.0168056", "0.0160326", "0.0160537", "0.0160537"),
    ("3p", 0.150, "0.00586811", "0.0043599", "0.0044663", "0.0044660"),
    ("3d", 0.025, "0.0437587", "0.0436030", "0.0436030", "0.0436030"),
    ("3d", 0.050, "0.0333681", "0.0327532", "0.0327532", "0.0327532"),
    ("3d", 0.075, "0.0243837", "0.0230306", "0.0230307", "0.0230307"),
    ("3d", 0.100, "0.0168055", "0.0144832", "0.0144842", "0.0144842"),
    ("3d", 0.150, "0.0058681", "0.0132820", "0.0013966", "0.0013894"),
    ("4p", 0.025, "0.0200000", "0.0199480", "0.0199489", "0.0199489"),
    ("4p", 0.050, "0.0112500", "0.0110430", "0.0110582", "0.0110582"),
    ("4p", 0.075, "0.0050000", "0.0045385", "0.0046219", "0.0046219"),
    ("4p", 0.100, "0.0012500", "0.0004434", "0.0007550", "0.0007532"),
    ("4d", 0.025, "0.0200000", "0.0198460", "0.0198462", "0.0198462"),
    ("4d", 0.050, "0.0112500", "0.0106609", "0.0106674", "0.0106674"),
    ("4d", 0.075, "0.0050000", "0.0037916", "0.0038345", "0.0038344"),
    ("4f", 0.025, "0.0200000", "0.0196911", "0.0196911", "0.0196911"),
    ("4f", 0.050, "0.0112500", "0.0100618", "0.0100620", "0.0100620"),
    ("4f", 0.075, "0.0050000", "0.0025468", "0.0025563", "0.0025557"),
    ("5p", 0.025, "0.0094531", "0.0094011", "0.0094036", None),
    ("5p", 0.050, "0.0028125", "0.0026058", "0.0026490", None),
    ("5d", 0.025, "0.0094531", "0.0092977", "0.0093037", None),
    ("5d", 0.050, "0.0028125", "0.0022044", "0.0023131", None),
    ("5f", 0.025, "0.0094531", "0.0091507", "0.0091521", None),
    ("5f", 0.050, "0.0028125", "0.0017421", "0.0017835", None),
    ("5g", 0.025, "0.0094531", "0.0089465", "0.0089465", None),
    ("5g", 0.050, "0.0028125", "0.0010664", "0.0010159", None),
    ("6p", 0.025, "0.0042014", "0.0041493", "0.0041548", None),
    ("6d", 0.025, "0.0042014", "0.0040452", "0.0040606", None),
    ("6f", 0.025, "0.0042014", "0.0038901", "0.0039168", None),
    ("6g", 0.025, "0.0042014", "0.0036943", "0.0037201", None),
]


@dataclass(frozen=True)
class ReferenceCell:
    state: str
    delta: float
    column: str
    printed: str | None

    @property
    def value(self) -> float | None:
        return None if self.printed is None else float(self.printed)


def table_i_cells():
    for state, delta, *values in TABLE_I:
        for column, printed in zip(TABLE_I_COLUMNS, values):
            yield ReferenceCell(state, delta, column, printed)


def table_ii_cells():
    for state, delta, *values in TABLE_II:
        for column, printed in zip(TABLE_II_COLUMNS, values):
            yield ReferenceCell(state, delta, column, printed)


def table_ii_lookup(state: str, delta: float, column: str = "numerical") -> float | None:
    for s, d, *values in TABLE_II:
        if s == state and abs(d - delta) < 1e-12:
            printed = values[TABLE_II_COLUMNS.index(column)]
            return None if printed is None else float(printed)
    raise KeyError((state, delta))
