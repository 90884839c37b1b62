"""Reference tables of abelian-subalgebra counts, embedded as data.

Rows cover all three published case lists: order-2 gradings with semisimple
even part on untwisted diagrams, on twisted diagrams, and the
one-dimensional-center (hermitian) case.  Each row is
(affine_symbol, k, p_or_q, slice_type, g0_type, count).

Lookup keys fold the family letter C into B: the two families share Weyl
order and determinant, and the printed g0 column of the source table uses
B where the diagram length pattern gives C in one exceptional twisted row.
"""

from __future__ import annotations

from math import comb

from .involution import HERMITIAN, SEMISIMPLE_K1, SEMISIMPLE_K2, canonical_atoms


def _fmt(atoms):
    return "x".join(f"{fam}{rank}" for fam, rank in atoms) if atoms else "-"


def _atoms(*pairs):
    return canonical_atoms([(f, r) for f, r in pairs if r > 0])


def rows(max_rank: int = 8, include_exceptional: bool = True):
    """All table rows whose base type has rank <= max_rank."""
    out = []

    def add(symbol, k, case, pq, slice_type, atoms, count):
        out.append({
            "affine_type": symbol,
            "k": k,
            "case": case,
            "p_or_q": pq,
            "delta_f_type": slice_type,
            "g0_type": _fmt(atoms),
            "atoms": atoms,
            "count": count,
        })

    # untwisted, even part semisimple
    for n in range(2, max_rank + 1):
        sym = f"B{n}^(1)"
        for p in range(2, n):
            add(sym, 1, SEMISIMPLE_K1, p, f"B{n}",
                _atoms(("D", p), ("B", n - p)), 4 * comb(n, p) - 1)
        add(sym, 1, SEMISIMPLE_K1, n, f"B{n}", _atoms(("D", n)), 2)
    for n in range(2, max_rank + 1):
        sym = f"C{n}^(1)"
        for p in range(1, n):
            add(sym, 1, SEMISIMPLE_K1, p, f"C{n}",
                _atoms(("C", p), ("C", n - p)), comb(n, p))
    for n in range(4, max_rank + 1):
        sym = f"D{n}^(1)"
        for p in range(2, n - 1):
            add(sym, 1, SEMISIMPLE_K1, p, f"D{n}",
                _atoms(("D", p), ("D", n - p)), 4 * comb(n, p) - 1)

    # twisted
    for n in range(1, max_rank // 2 + 1):
        sym = f"A{2 * n}^(2)"
        add(sym, 2, SEMISIMPLE_K2, n, f"C{n}", _atoms(("B", n)), 2 ** (n + 1) - 1)
    for n in range(2, (max_rank + 1) // 2 + 1):
        if 2 * n - 1 > max_rank:
            continue
        sym = f"A{2 * n - 1}^(2)"
        add(sym, 2, SEMISIMPLE_K2, 0, f"C{n}", _atoms(("C", n)), 2 ** (n - 1))
        add(sym, 2, SEMISIMPLE_K2, n, f"C{n}", _atoms(("D", n)), 2 ** (n + 1) - 1)
    for n in range(3, max_rank):
        sym = f"D{n + 1}^(2)"
        for p in range(1, n):
            add(sym, 2, SEMISIMPLE_K2, p, f"B{n}",
                _atoms(("B", p), ("B", n - p)), 4 * comb(n, p) - 1)
        add(sym, 2, SEMISIMPLE_K2, 0, f"B{n}", _atoms(("B", n)), 2)

    # hermitian (one-dimensional center; g0 column lists the derived algebra)
    for n in range(1, max_rank + 1):
        sym = f"A{n}^(1)"
        for q in range(1, n // 2 + 2):
            if q > n + 1 - q:
                continue
            add(sym, 1, HERMITIAN, q, f"A{n}",
                _atoms(("A", q - 1), ("A", n - q)),
                comb(n + 1, q) + q * comb(n, q))
    for n in range(2, max_rank + 1):
        add(f"B{n}^(1)", 1, HERMITIAN, 1, f"B{n}", _atoms(("B", n - 1)), 4 * n)
    for n in range(2, max_rank + 1):
        add(f"C{n}^(1)", 1, HERMITIAN, n, f"C{n}",
            _atoms(("A", n - 1)), 2 ** (n - 1) * (n + 2))
    for n in range(4, max_rank + 1):
        add(f"D{n}^(1)", 1, HERMITIAN, 1, f"D{n}", _atoms(("D", n - 1)), 4 * n)
        add(f"D{n}^(1)", 1, HERMITIAN, n, f"D{n}",
            _atoms(("A", n - 1)), 2 ** (n - 3) * (n + 4))

    if include_exceptional:
        add("G2^(1)", 1, SEMISIMPLE_K1, 1, "G2", _atoms(("A", 1), ("A", 1)), 5)
        add("F4^(1)", 1, SEMISIMPLE_K1, 1, "F4", _atoms(("A", 1), ("C", 3)), 23)
        add("F4^(1)", 1, SEMISIMPLE_K1, 4, "F4", _atoms(("B", 4)), 3)
        add("E6^(1)", 1, SEMISIMPLE_K1, 2, "E6", _atoms(("A", 1), ("A", 5)), 71)
        add("E7^(1)", 1, SEMISIMPLE_K1, 1, "E7", _atoms(("A", 1), ("D", 6)), 125)
        add("E7^(1)", 1, SEMISIMPLE_K1, 7, "E7", _atoms(("A", 7)), 143)
        add("E8^(1)", 1, SEMISIMPLE_K1, 1, "E8", _atoms(("A", 1), ("E", 7)), 239)
        add("E8^(1)", 1, SEMISIMPLE_K1, 7, "E8", _atoms(("D", 8)), 269)
        add("E6^(2)", 2, SEMISIMPLE_K2, 0, "F4", _atoms(("F", 4)), 4)
        add("E6^(2)", 2, SEMISIMPLE_K2, 4, "F4", _atoms(("C", 4)), 23)
        add("E6^(1)", 1, HERMITIAN, 1, "E6", _atoms(("D", 5)), 63)
        add("E7^(1)", 1, HERMITIAN, 7, "E7", _atoms(("E", 6)), 140)
    return out


def _fold(atoms):
    return tuple(sorted(("B" if fam == "C" else fam, rank) for fam, rank in atoms))


def lookup_key(affine_symbol: str, case: str, atoms):
    return (affine_symbol, case, _fold(atoms))


def reference_counts(max_rank: int = 8, include_exceptional: bool = True):
    """Map from (affine symbol, case, folded g0 atoms) to the table count."""
    table = {}
    for row in rows(max_rank, include_exceptional):
        key = lookup_key(row["affine_type"], row["case"], row["atoms"])
        if key in table:
            assert table[key] == row["count"], f"conflicting rows for {key}"
        table[key] = row["count"]
    return table


CSV_COLUMNS = ("affine_type", "k", "p_or_q", "delta_f_type", "g0_type", "count")
