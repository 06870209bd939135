from collections import Counter
from fractions import Fraction
from itertools import permutations, product
from math import factorial, gcd

import pytest

from regtorus.combinat import (
    Partition,
    WreathClass,
    cycle_type,
    cycles,
    partitions,
    permutation_of_type,
    sign,
    wreath_classes,
    wreath_order,
    z_lambda,
)
from regtorus.formulas import trace_ST
from regtorus.numkit import CycNum, QPoly, cyc_is_rational, divisors, root_of_unity
from regtorus.reps import (
    ClassFunction,
    PolyClassFunction,
    WreathClassFunction,
    betti_numbers,
    decompose,
    ind_cyclic,
    induce_wreath,
    induced_cohomology,
    inner_product,
    irreducible,
    isotypic_character,
    pd_extract,
    sn_character,
    sn_character_table,
    total_character,
    twisted_induce,
    verify_faithful,
    verify_induction,
    verify_pcor,
    weight_poly_PT,
    weight_poly_ST_total,
    weight_poly_T,
    wreath_det,
)

q = QPoly.q()


# -- independent oracles --------------------------------------------------------


def _power_sum_product(lam, n):
    """p_lam in n variables as {exponent tuple: coefficient}."""
    poly = {(0,) * n: 1}
    for part in lam:
        nxt = Counter()
        for mono, c in poly.items():
            for v in range(n):
                e = list(mono)
                e[v] += part
                nxt[tuple(e)] += c
        poly = nxt
    return poly


def frobenius_character(mu, lam):
    """chi^mu(lam) as the coefficient of x^{mu + delta} in the Vandermonde times p_lam."""
    n = sum(lam)
    mu = list(mu) + [0] * (n - len(mu))
    delta = list(range(n - 1, -1, -1))
    target = [m + d for m, d in zip(mu, delta)]
    p = _power_sum_product(lam, n)
    total = 0
    for perm in permutations(range(n)):
        exps = tuple(target[v] - delta[perm[v]] for v in range(n))
        if min(exps) < 0:
            continue
        sgn = sign(cycle_type(perm))
        total += sgn * p.get(exps, 0)
    return total


def wreath_elements(r, m):
    """Every element of W(r, m) as (perm of rm points, class, det)."""
    out = []
    for w in permutations(range(m)):
        sgn_w = sign(cycle_type(w))
        for ks in product(range(r), repeat=m):
            perm = tuple(w[a] * r + (b + ks[a]) % r for a in range(m) for b in range(r))
            y = WreathClass(r, [(len(c), sum(ks[a] for a in c)) for c in cycles(w)])
            det = sgn_w * root_of_unity(r, sum(ks))
            out.append((perm, y, det, w, ks))
    return out


def brute_induce(subgroup, n, value):
    """Ind_H^{S_n} of the class function h -> value(h) on H, by conjugating over all of S_n."""
    order = len(subgroup)
    out = {}
    for lam in partitions(n):
        g = permutation_of_type(lam)
        total = None
        for x in permutations(range(n)):
            h = [0] * n
            for a in range(n):
                h[x[a]] = x[g[a]]
            h = tuple(h)
            if h in subgroup:
                v = value(subgroup[h])
                total = v if total is None else total + v
        if total is None:
            out[lam] = Fraction(0)
        else:
            rational = cyc_is_rational(total * Fraction(1, order)) if isinstance(total, CycNum) else None
            out[lam] = rational if rational is not None else total * Fraction(1, order)
    return out


def hyperplane_permutation_character(r, m):
    """Fixed hyperplanes of {z_i = 0}, {z_i = zeta^c z_j} under each element of W(r, m)."""
    hyperplanes = [("axis", i) for i in range(m)]
    hyperplanes += [("pair", i, j, c) for i in range(m) for j in range(i + 1, m) for c in range(r)]

    def canon(i, j, c):
        return ("pair", i, j, c % r) if i < j else ("pair", j, i, -c % r)

    values = {}
    for _, y, _, w, ks in wreath_elements(r, m):
        fixed = 0
        for h in hyperplanes:
            if h[0] == "axis":
                fixed += w[h[1]] == h[1]
            else:
                _, i, j, c = h
                fixed += canon(w[i], w[j], c + ks[i] - ks[j]) == h
        assert values.setdefault(y, fixed) == fixed, "permutation character not a class function"
    return values


# -- combinatorics -----------------------------------------------------------------


def test_partitions_examples():
    assert partitions(0) == [()]
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions(5)) == 7


@pytest.mark.parametrize("lam, expected", [((1, 1, 1, 1), 24), ((4,), 4), ((2, 1, 1), 4), ((3, 3), 18)])
def test_z_lambda(lam, expected):
    assert z_lambda(lam) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_symmetric(n):
    assert sum(Fraction(factorial(n), z_lambda(lam)) for lam in partitions(n)) == factorial(n)


@pytest.mark.parametrize("r, m", [(1, 4), (2, 3), (3, 2), (4, 2), (6, 1)])
def test_wreath_class_sizes_and_fusion(r, m):
    elements = wreath_elements(r, m)
    assert len(elements) == wreath_order(r, m)
    counts = Counter(y for _, y, _, _, _ in elements)
    assert set(counts) == set(wreath_classes(r, m))
    for y, c in counts.items():
        assert c == wreath_order(r, m) // y.centralizer_order()
    for perm, y, det, _, _ in elements:
        assert cycle_type(perm) == y.fused_cycle_type()
        assert det == wreath_det(y)


# -- character table ---------------------------------------------------------------


def test_character_examples():
    for lam in partitions(4):
        assert sn_character((4,), lam) == 1
        assert sn_character((1, 1, 1, 1), lam) == (-1) ** (4 - len(lam))
    assert [sn_character((2, 1), lam) for lam in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]


def test_standard_representation_by_permutation_matrices():
    # standard representation = permutation representation minus trivial
    for n in range(2, 7):
        for lam in partitions(n):
            g = permutation_of_type(lam)
            fixed = sum(1 for a in range(n) if g[a] == a)
            assert sn_character((n - 1, 1), lam) == fixed - 1


@pytest.mark.parametrize("n", range(1, 7))
def test_character_table_matches_frobenius_formula(n):
    for mu in partitions(n):
        for lam in partitions(n):
            assert sn_character(mu, lam) == frobenius_character(mu, lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_orthogonality(n):
    parts = partitions(n)
    for mu in parts:
        for nu in parts:
            ip = sum(Fraction(sn_character(mu, lam) * sn_character(nu, lam), z_lambda(lam)) for lam in parts)
            assert ip == (1 if mu == nu else 0)


def test_character_table_bound():
    assert len(sn_character_table(4)) == 25
    with pytest.raises(ValueError):
        sn_character_table(11)


def test_decompose_examples():
    regular = ClassFunction(3, {lam: (6 if lam == (1, 1, 1) else 0) for lam in partitions(3)})
    assert decompose(regular) == {Partition((3,)): 1, Partition((2, 1)): 2, Partition((1, 1, 1)): 1}
    assert decompose(irreducible((4,))) == {Partition((4,)): 1}
    h1 = isotypic_character(2, 2, 1)
    assert h1.as_tuple() == (1, 1)
    assert decompose(h1) == {Partition((2,)): 1}


def test_inner_product_and_twist():
    chi = irreducible((3, 1))
    assert inner_product(chi, chi) == 1
    assert chi.twist_sign() == irreducible((2, 1, 1))


def test_class_function_must_cover_all_classes():
    with pytest.raises(ValueError):
        ClassFunction(3, {(3,): 1})


# -- Poincare duality ----------------------------------------------------------------


def test_pd_extract_examples():
    P = weight_poly_ST_total(2)
    assert P[(1, 1)] == q - 3 and P[(2,)] == q - 1
    assert pd_extract(P, 0).as_tuple() == (1, 1)
    h1 = pd_extract(P, 1)
    assert h1[(1, 1)] == 3 and h1[(2,)] == 1


def test_pd_extract_PT13_by_hyperplane_oracle():
    h1 = pd_extract(induce_source := weight_poly_PT(1, 3), 1)
    assert induce_source.dim == 2
    values = {y.cycles: v for y, v in h1.values.items()}
    assert values[((1, 0), (1, 0), (1, 0))] == 5
    assert values[((2, 0), (1, 0))] == 1
    assert values[((3, 0),)] == -1
    # H^1(PT) = H^1(T) minus the trivial summand coming from the C^* factor
    perm = hyperplane_permutation_character(1, 3)
    for y, v in h1.values.items():
        assert v == perm[y] - 1


@pytest.mark.parametrize("r, m", [(1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 2)])
def test_first_cohomology_is_hyperplane_permutation_character(r, m):
    h1 = pd_extract(weight_poly_T(r, m), 1)
    perm = hyperplane_permutation_character(r, m)
    for y in wreath_classes(r, m):
        assert h1[y] == perm[y]
    h0 = pd_extract(weight_poly_T(r, m), 0)
    assert all(v == 1 for v in h0.values.values())


def test_pd_extract_needs_dimension():
    P = PolyClassFunction(2, {(1, 1): q, (2,): q})
    with pytest.raises(ValueError):
        pd_extract(P, 0)
    assert pd_extract(P, 0, dim=1).as_tuple() == (1, 1)
    assert pd_extract(P, 3, dim=1).is_zero()


# -- induction ------------------------------------------------------------------------


def _as_subgroup(r, m):
    return {perm: (y, det) for perm, y, det, _, _ in wreath_elements(r, m)}


def test_induce_wreath_r1_is_identity():
    f = pd_extract(weight_poly_PT(1, 3), 1)
    induced = induce_wreath(f)
    for y, v in f.values.items():
        assert induced[Partition(i for i, _ in y.cycles)] == v


def test_induce_trivial_from_mu2():
    f = WreathClassFunction(2, 1, {y: Fraction(1) for y in wreath_classes(2, 1)})
    assert induce_wreath(f).as_tuple() == (1, 1)
    assert twisted_induce(f).as_tuple() == (1, 1)


CASES = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (5, 1), (6, 1)]


@pytest.mark.parametrize("r, m", CASES)
def test_twisted_induction_matches_coset_brute_force(r, m):
    H = _as_subgroup(r, m)
    for j in range(m):
        f = pd_extract(weight_poly_PT(r, m), j)
        for det_inverse in (True, False):
            got = twisted_induce(f, det_inverse=det_inverse)

            def value(entry):
                y, det = entry
                # det is a signed r-th root of unity, so det^(2r) = 1
                twist = det ** (2 * r - 1) if det_inverse else det
                return twist * f[y]

            brute = brute_induce(H, r * m, value)
            for lam in partitions(r * m):
                assert got[lam] == sign(lam) * brute[lam]
        plain = brute_induce(H, r * m, lambda entry: CycNum.rational(f[entry[0]], r))
        assert induce_wreath(f).as_tuple() == tuple(plain[lam] for lam in partitions(r * m))


@pytest.mark.parametrize("n", range(1, 7))
def test_ind_cyclic_matches_coset_brute_force(n):
    c = permutation_of_type((n,))
    H, g = {}, tuple(range(n))
    for j in range(n):
        H[g] = j
        g = tuple(c[a] for a in g)
    for k in range(n):
        brute = brute_induce(H, n, lambda j: root_of_unity(n, k * j))
        assert ind_cyclic(n, k).as_tuple() == tuple(brute[lam] for lam in partitions(n))
    assert ind_cyclic(n, 0).dimension() == factorial(n - 1)


def test_ind_cyclic_examples():
    assert ind_cyclic(2, 1)[(1, 1)] == 1 and ind_cyclic(2, 1)[(2,)] == -1
    f = ind_cyclic(3, 1)
    assert (f[(1, 1, 1)], f[(2, 1)], f[(3,)]) == (2, 0, -1)


def test_wreath_det_per_cycle_sign():
    # sign (x) det^{-1} on a single (i, theta)-cycle fused into r/t cycles of length i t
    for r in range(1, 7):
        for i in range(1, 5):
            for k in range(r):
                y = WreathClass(r, [(i, k)])
                t = r // gcd(k, r)
                eps = sign(y.fused_cycle_type())
                expected = (-1) ** ((i - 1 + r * i - r // t) % 2) * root_of_unity(r, -k)
                assert eps * wreath_det(y, inverse=True) == expected


# -- cohomology of ST(1,n) --------------------------------------------------------------


def test_isotypic_examples():
    assert isotypic_character(2, 2, 1).as_tuple() == (1, 1)
    chi = isotypic_character(3, 3, 2)
    assert (chi[(1, 1, 1)], chi[(2, 1)], chi[(3,)]) == (2, 0, -1)
    assert isotypic_character(2, 1, 0).as_tuple() == (1, 1)
    chi = isotypic_character(2, 1, 1)
    assert (chi[(1, 1)], chi[(2,)]) == (2, 0)


def test_betti_examples():
    assert betti_numbers(2) == [1, 3]
    assert betti_numbers(3, 3) == [0, 0, 2]
    assert betti_numbers(4, 2) == [0, 0, 3, 9]


def test_isotypic_rejects_bad_input():
    with pytest.raises(ValueError):
        isotypic_character(4, 3, 0)
    with pytest.raises(ValueError):
        isotypic_character(3, 1, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_isotypic_characters_are_genuine(n):
    for r in divisors(n):
        dims = betti_numbers(n, r)
        for j in range(n):
            chi = isotypic_character(n, r, j)
            assert chi.dimension() == dims[j]
            for lam in partitions(n):
                assert abs(chi[lam]) <= chi.dimension()
            for mult in decompose(chi).values():
                assert mult.denominator == 1 and mult > 0


@pytest.mark.parametrize("n", range(1, 7))
def test_total_is_sum_of_isotypic_parts(n):
    for j in range(n):
        total = ClassFunction.zero(n)
        for c in range(n):
            total = total + isotypic_character(n, n // gcd(c, n), j)
        assert total == total_character(n, j)


def test_euler_characteristic_matches_evaluation_at_one():
    for n in range(2, 7):
        for r in divisors(n):
            dims = betti_numbers(n, r)
            assert sum((-1) ** j * d for j, d in enumerate(dims)) == trace_ST([1] * n, r)(1)


@pytest.mark.parametrize("m", range(1, 7))
def test_pcor(m):
    for r in divisors(m):
        assert verify_pcor(r, m).passed


@pytest.mark.parametrize("n", range(1, 7))
def test_induction_identity(n):
    for r in divisors(n):
        for j in range(n):
            report = verify_induction(n, r, j)
            assert report.passed, report.failures
            if j < n - n // r:
                assert induced_cohomology(n, r, j).is_zero()
    assert verify_faithful(n).passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_faithful_top_degree_is_sign_twist_of_cyclic_induction(n):
    # the sign twist permutes the cyclic inductions, so the choice of faithful character is immaterial
    twisted = {ind_cyclic(n, k).twist_sign().as_tuple() for k in range(n) if gcd(k, n) == 1}
    plain = {ind_cyclic(n, k).as_tuple() for k in range(n) if gcd(k, n) == 1}
    assert isotypic_character(n, n, n - 1).as_tuple() in twisted
    assert len(plain) == 1 and len(twisted) == 1
