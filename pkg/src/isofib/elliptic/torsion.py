from __future__ import annotations

from ..errors import InvalidInput
from ..groupscheme.spec import Alpha, Etale, GroupSchemeSpec, Mu, SSKernel
from .curve import WeierstrassCurve


def _split(n, p):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return n, e


def torsion_structure(curve: WeierstrassCurve, n: int) -> GroupSchemeSpec:
    """E[n] as a group scheme over the algebraic closure."""
    if not isinstance(n, int) or n <= 0:
        raise InvalidInput("torsion level must be a positive integer")
    p = curve.p
    m, e = _split(n, p)
    atoms = Etale(m) + Etale(m) if m > 1 else []
    if e:
        if curve.is_ordinary():
            atoms += Etale(p ** e) + [Mu(p ** e)]
        else:
            # E[p^e] = Ker F^(2e) for supersingular E
            atoms.append(SSKernel(p, 2 * e))
    return GroupSchemeSpec(p, atoms)


def frobenius_kernel(curve: WeierstrassCurve, k: int) -> GroupSchemeSpec:
    """Ker(F^k : E -> E^(p^k))."""
    if not isinstance(k, int) or k < 0:
        raise InvalidInput("Frobenius power must be a non-negative integer")
    p = curve.p
    if k == 0:
        return GroupSchemeSpec(p, [])
    if curve.is_ordinary():
        return GroupSchemeSpec(p, [Mu(p ** k)])
    if k == 1:
        return GroupSchemeSpec(p, [Alpha(p)])
    return GroupSchemeSpec(p, [SSKernel(p, k)])


def is_subgroup_of_curve(spec: GroupSchemeSpec, curve: WeierstrassCurve) -> bool:
    return spec_fits_curve_type(spec, curve.is_supersingular())


def spec_fits_curve_type(spec: GroupSchemeSpec, supersingular: bool) -> bool:
    """Whether spec embeds into some elliptic curve of the given type.

    Prime-to-p torsion contributes at most two cyclic factors per prime.
    Ordinary curves add one cyclic p-part and one mu_{p^k}; supersingular
    curves have only the Frobenius-kernel chain alpha_p, Ker F^2, ...
    """
    p = spec.p
    by_prime: dict = {}
    for a in spec.of_kind("etale"):
        r = _prime_of(a.order)
        by_prime[r] = by_prime.get(r, 0) + 1
    for r, cnt in by_prime.items():
        if r != p and cnt > 2:
            return False
    p_etale = by_prime.get(p, 0)
    mus = spec.of_kind("mu")
    local = spec.of_kind("alpha") + spec.of_kind("sskernel")
    if supersingular:
        if p_etale or mus:
            return False
        if len(local) > 1:
            return False
        return all(a.kind == "sskernel" or a.order == p for a in local)
    return p_etale <= 1 and len(mus) <= 1 and not local


def embeds_in_some_elliptic_curve(spec: GroupSchemeSpec) -> bool:
    return spec_fits_curve_type(spec, False) or spec_fits_curve_type(spec, True)


def _prime_of(n):
    d = 2
    while n % d:
        d += 1
    return d
