"""Verification suite: every check is a pure function of the Config.

A check returns (ok, witness).  Reports are line-delimited JSON records with
the fixed field order theorem, depth, status, witness, sorted by theorem id.
Wall-times are returned separately so that reports stay byte-reproducible.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial

from .ari_exp import (
    arit_apply,
    c_coeff,
    compositions,
    compositions_upto,
    ex_coeff,
    expari,
    expari_expansion,
    is_symmetral_family,
    logari,
    solve_preari_coefficients,
)
from .exactalg import LinForm
from .exactalg.ratfun import is_zero as ratfun_is_zero
from .exactalg.textio import render_ratfun
from .flexion import (
    bijection_d1,
    bijection_dge2,
    bijection_e_to_d,
    enumerate_decompositions,
    g_expand,
    g_expand_via_e,
    g_of_shuffle,
    g_of_star_shuffle,
    ganit_apply,
    gpoc_recurrence_rhs,
    g_recurrence_rhs,
    named_mould,
    pic_identity_residuals,
    transfer_direct,
    transfer_sum,
)
from .gamma import GammaSpec
from .mould import Mould, exp_times, identity_mould, log_times, lu_bracket, mu, random_component, random_mould
from .mouldio import parse_mould, render_mould, render_sigmas
from .symmetry import check_symmetry, dimould_unit, random_structured, sh_map, shstar_map, tensor
from .words import Letter, generic_word, render_word

SUITES = ("examples", "dimould", "exp", "ganit", "recurrences", "appendix")
THREADS_ENV = "MOULDCALC_THREADS"
WITNESS_LIMIT = 400


@dataclass(frozen=True)
class Config:
    group: GammaSpec
    depth: int = 4
    equality: str = "canonical"
    seed: int = 0
    trials: int = 8
    samples: int = 20
    identity_samples: int = 100
    flip_arit: bool = False

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.equality not in ("canonical", "probabilistic"):
            raise ValueError("equality must be canonical or probabilistic")

    def rng(self, tag: str, i: int = 0) -> random.Random:
        return random.Random("%d:%s:%d" % (self.seed, tag, i))

    def subseed(self, tag: str, i: int = 0) -> int:
        return self.rng(tag, i).getrandbits(63)


def default_config(**kw) -> Config:
    kw.setdefault("group", GammaSpec.parse("z2"))
    return Config(**kw)


class CheckFailed(Exception):
    """Raised inside a check to report a witness."""


# ------------------------------------------------------------------ helpers


def _clip(text: str) -> str:
    if len(text) <= WITNESS_LIMIT:
        return text
    return text[: WITNESS_LIMIT - 3] + "..."


def _rf(f) -> str:
    return render_ratfun(f, "x")


def _sym_witness(res) -> str:
    w = res.witness
    return "p=%d q=%d sigmas=%s residual=%s" % (w.p, w.q, render_sigmas(w.sigmas), _rf(w.residual))


def keep(m: Mould) -> Mould:
    """Round-trip every produced mould through the text format."""
    text = render_mould(m)
    back = parse_mould(text)
    if render_mould(back) != text or back != m:
        raise CheckFailed("serialization round-trip mismatch for %r" % (m,))
    return m


def require_equal(a: Mould, b: Mould, cfg: Config, what: str) -> None:
    keep(a)
    keep(b)
    if cfg.equality == "canonical":
        d = a.first_difference(b)
        if d is not None:
            raise CheckFailed("%s: depth=%d sigmas=%s diff=%s" % (what, d[0], render_sigmas(d[1]), _rf(d[2])))
        return
    a.same_shape(b)
    if a.empty != b.empty:
        raise CheckFailed("%s: empty components differ" % what)
    rng = cfg.rng("equality:" + what)
    for r, sig, f in a.items():
        g = b.tables[r - 1][sig]
        if not ratfun_is_zero(f - g, "probabilistic", cfg.trials, rng):
            raise CheckFailed("%s: depth=%d sigmas=%s" % (what, r, render_sigmas(sig)))


def require_symmetry(m: Mould, kind: str, what: str, route: str = "direct") -> None:
    keep(m)
    res = check_symmetry(m, kind, route=route)
    if not res.holds:
        raise CheckFailed("%s not %s: %s" % (what, kind, _sym_witness(res)))


def _structured(cfg: Config, kind: str, tag: str, i: int, convention: str = "V") -> Mould:
    return keep(random_structured(kind, cfg.group, cfg.depth, cfg.subseed(tag, i), convention))


_POOL: dict = {}


def _pooled(cfg: Config, kind: str, i: int) -> Mould:
    """The i-th shared V-convention sample of a symmetry kind.

    Generating structured moulds dominates the run time, so checks that only
    need "some moulds of kind X" draw from one deterministic pool per process.
    """
    key = (cfg.group.render(), cfg.depth, cfg.seed, kind, i)
    if key not in _POOL:
        _POOL[key] = _structured(cfg, kind, "pool", i)
    return _POOL[key]


def _random(cfg: Config, rng, empty) -> Mould:
    return keep(random_mould("V", cfg.group, cfg.depth, rng, empty=empty))


def _elements(spec: GammaSpec):
    return [v[0] for v in spec.vectors(1)]


def _all_words(spec: GammaSpec, n: int, start: int = 1):
    for sig in spec.vectors(n):
        yield generic_word(sig, start)


# --------------------------------------------------------- examples suite

EXAMPLE_CLAIMS = (("A", "alternal"), ("paj", "symmetral"), ("C", "alternil"), ("pic", "symmetril"), ("pij", "symmetral"))


def _example_check(name: str, kind: str, route: str):
    def run(cfg: Config):
        m = keep(named_mould(name, cfg.group, cfg.depth))
        res = check_symmetry(m, kind, route=route)
        if not res.holds:
            return False, _sym_witness(res)
        return True, None

    return run


def check_pic_not_symmetral(cfg: Config):
    pic = keep(named_mould("pic", cfg.group, cfg.depth))
    direct = check_symmetry(pic, "symmetral", route="direct")
    char = check_symmetry(pic, "symmetral", route="characterization")
    if direct.holds or char.holds:
        return False, "pic passed the symmetral test"
    return True, "expected failure: " + _sym_witness(direct)


# ----------------------------------------------------------- dimould suite


def check_sh_homomorphism(cfg: Config, star: bool):
    rng = cfg.rng("sh-hom", int(star))
    shm = shstar_map if star else sh_map
    for i in range(3):
        m = _random(cfg, rng, i % 2)
        n = _random(cfg, rng, 1)
        lhs = shm(mu(m, n))
        rhs = shm(m) * shm(n)
        d = lhs.first_difference(rhs)
        if d is not None:
            return False, "sample %d: shape=(%d,%d) sigmas=%s" % (i, d[0], d[1], render_sigmas(d[2]))
    return True, None


def check_tensor_law(cfg: Config):
    rng = cfg.rng("tensor-law")
    for i in range(3):
        m1, n1, m2, n2 = (_random(cfg, rng, rng.choice([0, 1])) for _ in range(4))
        lhs = tensor(mu(m1, n1), mu(m2, n2))
        rhs = tensor(m1, m2) * tensor(n1, n2)
        d = lhs.first_difference(rhs)
        if d is not None:
            return False, "sample %d: shape=(%d,%d) sigmas=%s" % (i, d[0], d[1], render_sigmas(d[2]))
    return True, None


def check_sh_identity(cfg: Config):
    iden = identity_mould("V", cfg.group, cfg.depth)
    unit = dimould_unit("V", cfg.group, cfg.depth)
    for name, dm in (("Sh", sh_map(iden)), ("Sh*", shstar_map(iden))):
        if dm != unit or tensor(iden, iden) != unit:
            return False, "%s(I) differs from I(x)I" % name
    return True, None


def check_route_agreement(cfg: Config):
    kinds = ("alternal", "symmetral", "alternil", "symmetril")
    for i in range(cfg.samples):
        kind = kinds[i % 4]
        m = _pooled(cfg, kind, i)
        if i % 2:
            # perturb one top-depth entry so that both routes must reject
            rng = cfg.rng("routes-perturb", i)
            sig = tuple(rng.choice(_elements(cfg.group)) for _ in range(cfg.depth))
            tables = [dict(t) for t in m.tables]
            tables[-1][sig] = tables[-1][sig] + random_component(rng, cfg.depth)
            m = keep(Mould(m.convention, m.spec, m.R, m.empty, tables))
        a = check_symmetry(m, kind, route="direct").holds
        b = check_symmetry(m, kind, route="characterization").holds
        if a != b or a != (i % 2 == 0):
            return False, "sample %d (%s, perturbed=%s): direct=%s characterization=%s" % (i, kind, bool(i % 2), a, b)
    return True, None


def _closure_check(kind: str, op):
    def run(cfg: Config):
        for i in range(cfg.samples):
            m = _pooled(cfg, kind, i)
            n = _pooled(cfg, kind, (i + 1) % cfg.samples)
            require_symmetry(op(m, n), kind, "sample %d" % i)
        return True, None

    return run


# --------------------------------------------------------------- exp suite


def _exp_check(src: str, dst: str, count: int = 5):
    def run(cfg: Config):
        for i in range(count):
            a = _pooled(cfg, src, i)
            require_symmetry(exp_times(a), dst, "exp of sample %d" % i)
        return True, None

    return run


def check_exp_log_roundtrip(cfg: Config):
    for i in range(3):
        for kind in ("alternal", "alternil"):
            a = _structured(cfg, kind, "explog", i)
            s = exp_times(a)
            require_equal(log_times(s), a, cfg, "log(exp(%s sample %d))" % (kind, i))
            require_equal(exp_times(log_times(s)), s, cfg, "exp(log(exp(%s sample %d)))" % (kind, i))
    return True, None


# ------------------------------------------------------------- ganit suite


def _random_letter(rng, spec, nvars: int) -> Letter:
    while True:
        form = LinForm({i: rng.randint(-3, 3) for i in range(1, nvars + 1)})
        if form != LinForm({}):
            return Letter(rng.choice(_elements(spec)), form)


def check_pic_identities(cfg: Config):
    pic = keep(named_mould("pic", cfg.group, cfg.depth))
    rng = cfg.rng("pic-identities")
    done = 0
    attempts = 0
    while done < cfg.identity_samples:
        attempts += 1
        if attempts > 20 * cfg.identity_samples:
            return False, "could not draw enough pole-free samples"
        w1, w2, w3 = (_random_letter(rng, cfg.group, 4) for _ in range(3))
        split = rng.randint(0, cfg.depth)
        om = tuple(_random_letter(rng, cfg.group, 4) for _ in range(split))
        et = tuple(_random_letter(rng, cfg.group, 4) for _ in range(rng.randint(0, cfg.depth - split)))
        forms = [w1.form, w2.form, w3.form, w1.form - w2.form, w2.form - w3.form, w3.form - w1.form]
        forms += [l.form for l in om + et]
        if any(f == LinForm({}) for f in forms):
            continue
        res = pic_identity_residuals(w1, w2, w3, om, et, pic)
        for name in sorted(res):
            if not res[name].is_zero():
                return False, "%s identity at %s: residual %s" % (name, render_word((w1, w2, w3)), _rf(res[name]))
        done += 1
    return True, None


def _ganit_bases(cfg: Config):
    rng = cfg.rng("ganit-random-base")
    return (
        ("pic", keep(named_mould("pic", cfg.group, cfg.depth))),
        ("poc", keep(named_mould("poc", cfg.group, cfg.depth))),
        ("random", _random(cfg, rng, 1)),
    )


def _morphism_check(which: str):
    def run(cfg: Config):
        b = dict(_ganit_bases(cfg))[which]
        rng = cfg.rng("ganit-morphism-" + which)
        for i in range(2):
            m = _random(cfg, rng, rng.choice([0, 1]))
            n = _random(cfg, rng, 1)
            require_equal(ganit_apply(b, mu(m, n)), mu(ganit_apply(b, m), ganit_apply(b, n)), cfg, "sample %d" % i)
        return True, None

    return run


def check_ganit_inverse(cfg: Config):
    pic = named_mould("pic", cfg.group, cfg.depth)
    poc = named_mould("poc", cfg.group, cfg.depth)
    rng = cfg.rng("ganit-inverse")
    for i in range(3):
        m = _random(cfg, rng, i % 2)
        require_equal(ganit_apply(poc, ganit_apply(pic, m)), m, cfg, "poc after pic, sample %d" % i)
        require_equal(ganit_apply(pic, ganit_apply(poc, m)), m, cfg, "pic after poc, sample %d" % i)
    return True, None


def check_ganit_diagram(cfg: Config):
    pic = named_mould("pic", cfg.group, cfg.depth)
    for i in range(3):
        a = _structured(cfg, "alternal", "diagram", i)
        require_equal(exp_times(ganit_apply(pic, a)), ganit_apply(pic, exp_times(a)), cfg, "sample %d" % i)
    return True, None


def _ganit_maps(base: str, src: str, dst: str):
    def run(cfg: Config):
        b = named_mould(base, cfg.group, cfg.depth)
        for i in range(cfg.samples):
            m = _pooled(cfg, src, i)
            require_symmetry(ganit_apply(b, m), dst, "image of sample %d" % i)
        return True, None

    return run


# ------------------------------------------------------- recurrences suite


def check_decomposition_counts(cfg: Config):
    spec = cfg.group
    for n in range(0, cfg.depth + 1):
        for w in _all_words(spec, n):
            for t in range(1, n + 3):
                d = enumerate_decompositions(w, t, "D")
                d2 = enumerate_decompositions(w, t, "D", ">=2")
                d1 = enumerate_decompositions(w, t, "D", "=1")
                if t >= 2 and sorted(map(repr, d)) != sorted(map(repr, d1 + d2)):
                    return False, "D_%d partition fails at %s" % (t, render_word(w))
                if not n:
                    continue
                wp = w[1:]
                if t >= 2:
                    # the split by head length only exists for t >= 2
                    img2 = [bijection_dge2(x) for x in d2]
                    if sorted(map(repr, img2)) != sorted(map(repr, enumerate_decompositions(wp, t, "D"))):
                        return False, "D_%d^(>=2) bijection fails at %s" % (t, render_word(w))
                    img1 = [bijection_d1(x) for x in d1]
                    if sorted(map(repr, img1)) != sorted(map(repr, enumerate_decompositions(wp, t - 1, "D"))):
                        return False, "D_%d^1 bijection fails at %s" % (t, render_word(w))
                e = enumerate_decompositions(wp, t, "E")
                img = [bijection_e_to_d(w[0], x) for x in e]
                if len(set(map(repr, img))) != len(e) or sorted(map(repr, img)) != sorted(map(repr, d)):
                    return False, "E_%d -> D_%d bijection fails at %s" % (t, t, render_word(w))
    return True, None


def _over_words(fn):
    """Run fn(b, w) for B in (pic, poc) and all generic words of length 2..R."""

    def run(cfg: Config):
        bases = {"pic": named_mould("pic", cfg.group, cfg.depth), "poc": named_mould("poc", cfg.group, cfg.depth)}
        for n in range(1, cfg.depth + 1):
            for w in _all_words(cfg.group, n):
                bad = fn(bases, w)
                if bad:
                    return False, "%s at %s" % (bad, render_word(w))
        return True, None

    return run


def _equiv_equation(bases, w):
    for name in ("pic", "poc"):
        if g_expand(bases[name], w) != g_expand_via_e(bases[name], w):
            return "g_%s differs from its E-form" % name
    return None


def _pic_recurrence(bases, w):
    if len(w) >= 2 and g_expand(bases["pic"], w) != g_recurrence_rhs(bases["pic"], w):
        return "recurrence fails"
    return None


def _poc_recurrence(bases, w):
    if len(w) >= 2 and g_expand(bases["poc"], w) != gpoc_recurrence_rhs(bases["poc"], w):
        return "recurrence fails"
    return None


def _over_pairs(fn):
    """Run fn(cfg, bases, alpha, beta) on generic alpha, beta with |alpha|+|beta| <= R, both nonempty."""

    def run(cfg: Config):
        bases = {"pic": named_mould("pic", cfg.group, cfg.depth), "poc": named_mould("poc", cfg.group, cfg.depth)}
        ctx = {}
        for n in range(2, cfg.depth + 1):
            for p in range(1, n):
                for sig in cfg.group.vectors(n):
                    a = generic_word(sig[:p])
                    b = generic_word(sig[p:], p + 1)
                    bad = fn(cfg, bases, a, b, ctx)
                    if bad:
                        return False, "%s at alpha=%s beta=%s" % (bad, render_word(a), render_word(b))
        return True, None

    return run


def _intertwine_star(cfg, bases, a, b, ctx):
    lhs, rhs = g_of_star_shuffle(bases["pic"], a, b)
    return None if lhs == rhs else "g_pic(alpha sh* beta) != g_pic(alpha) sh g_pic(beta)"


def _intertwine_plain(cfg, bases, a, b, ctx):
    lhs, rhs = g_of_shuffle(bases["poc"], a, b)
    return None if lhs == rhs else "g_poc(alpha sh beta) != g_poc(alpha) sh* g_poc(beta)"


def _transfer(name: str, star_outside: bool):
    def fn(cfg, bases, a, b, ctx):
        if "m" not in ctx:
            ctx["m"] = _random(cfg, cfg.rng("transfer-" + name), 1)
            ctx["n"] = keep(ganit_apply(bases[name], ctx["m"]))
        lhs = transfer_direct(ctx["n"], a, b, star_outside)
        rhs = transfer_sum(bases[name], ctx["m"], a, b, not star_outside)
        if lhs != rhs:
            return "transfer identity fails, residual %s" % _rf(lhs - rhs)
        return None

    return fn


# ---------------------------------------------------------- appendix suite

APPENDIX_WEIGHT = 6


def check_ex_symmetral(cfg: Config):
    ok, wit = is_symmetral_family(ex_coeff, APPENDIX_WEIGHT)
    if ok:
        return True, None
    m, n, lhs, rhs = wit
    return False, "m=%s n=%s lhs=%s rhs=%s" % (m, n, lhs, rhs)


def check_c_recurrence(cfg: Config):
    for m in compositions_upto(APPENDIX_WEIGHT):
        want = factorial(sum(m)) * ex_coeff(m)
        if c_coeff(m) != want:
            return False, "m=%s C=%s (sum m)!Ex=%s" % (m, c_coeff(m), want)
    return True, None


def check_c_independence(cfg: Config):
    for i in range(2):
        a = _structured(cfg, "alternal", "c-independence", i, "U")
        for k in range(1, cfg.depth + 1):
            coeffs, exact = solve_preari_coefficients(a, k, seed=cfg.subseed("c-solve", 10 * i + k), flipped=cfg.flip_arit)
            if coeffs is None:
                return False, "sample %d: degenerate product basis at k=%d" % (i, k)
            if not exact:
                return False, "sample %d: fitted coefficients fail symbolically at k=%d" % (i, k)
            for c in compositions(k):
                if coeffs[c] != c_coeff(c):
                    return False, "sample %d: coefficient of %s is %s, expected C=%s" % (i, c, coeffs[c], c_coeff(c))
    return True, None


def check_arit_derivation(cfg: Config):
    rng = cfg.rng("arit-derivation")
    for i in range(3):
        b = _structured(cfg, "alternal", "arit-derivation-b", i, "U")
        m = keep(random_mould("U", cfg.group, cfg.depth, rng, empty=rng.choice([0, 1])))
        n = keep(random_mould("U", cfg.group, cfg.depth, rng, empty=rng.choice([0, 1])))
        f = cfg.flip_arit
        lhs = arit_apply(b, mu(m, n), f)
        rhs = mu(arit_apply(b, m, f), n) + mu(m, arit_apply(b, n, f))
        require_equal(lhs, rhs, cfg, "sample %d" % i)
    return True, None


def check_arit_alternal(cfg: Config):
    for i in range(3):
        a = _structured(cfg, "alternal", "arit-alternal-a", i, "U")
        b = _structured(cfg, "alternal", "arit-alternal-b", i, "U")
        require_symmetry(arit_apply(b, a, cfg.flip_arit), "alternal", "arit(B)(A), sample %d" % i)
    return True, None


def check_expari_expansion(cfg: Config):
    for i in range(2):
        a = _structured(cfg, "alternal", "expari-expansion", i, "U")
        require_equal(expari(a, cfg.flip_arit), expari_expansion(a, cfg.flip_arit), cfg, "sample %d" % i)
    return True, None


def check_expari_symmetral(cfg: Config):
    for i in range(3):
        a = _structured(cfg, "alternal", "expari-symmetral", i, "U")
        require_symmetry(expari(a, cfg.flip_arit), "symmetral", "expari of sample %d" % i)
    return True, None


def check_logari(cfg: Config):
    for i in range(2):
        a = _structured(cfg, "alternal", "logari", i, "U")
        back = logari(expari(a, cfg.flip_arit), cfg.flip_arit)
        require_equal(back, a, cfg, "sample %d" % i)
        require_symmetry(back, "alternal", "logari of sample %d" % i)
    return True, None


# ---------------------------------------------------------------- registry


def _registry():
    reg = []
    for name, kind in EXAMPLE_CLAIMS:
        for route in ("direct", "characterization"):
            reg.append(("examples.%s-%s.%s" % (name, kind, route), "examples", _example_check(name, kind, route)))
    reg.append(("examples.pic-not-symmetral", "examples", check_pic_not_symmetral))

    reg += [
        ("dimould.sh-homomorphism", "dimould", lambda c: check_sh_homomorphism(c, False)),
        ("dimould.shstar-homomorphism", "dimould", lambda c: check_sh_homomorphism(c, True)),
        ("dimould.tensor-law", "dimould", check_tensor_law),
        ("dimould.sh-identity", "dimould", check_sh_identity),
        ("dimould.route-agreement", "dimould", check_route_agreement),
        ("dimould.closure-mu-symmetral", "dimould", _closure_check("symmetral", mu)),
        ("dimould.closure-mu-symmetril", "dimould", _closure_check("symmetril", mu)),
        ("dimould.closure-lu-alternal", "dimould", _closure_check("alternal", lu_bracket)),
        ("dimould.closure-lu-alternil", "dimould", _closure_check("alternil", lu_bracket)),
    ]
    reg += [
        ("exp.alternal-to-symmetral", "exp", _exp_check("alternal", "symmetral")),
        ("exp.alternil-to-symmetril", "exp", _exp_check("alternil", "symmetril")),
        ("exp.log-roundtrip", "exp", check_exp_log_roundtrip),
    ]
    reg += [
        ("ganit.pic-identities", "ganit", check_pic_identities),
        ("ganit.morphism-pic", "ganit", _morphism_check("pic")),
        ("ganit.morphism-poc", "ganit", _morphism_check("poc")),
        ("ganit.morphism-random", "ganit", _morphism_check("random")),
        ("ganit.inverse", "ganit", check_ganit_inverse),
        ("ganit.diagram", "ganit", check_ganit_diagram),
        ("ganit.pic-alternal-to-alternil", "ganit", _ganit_maps("pic", "alternal", "alternil")),
        ("ganit.pic-symmetral-to-symmetril", "ganit", _ganit_maps("pic", "symmetral", "symmetril")),
        ("ganit.poc-alternil-to-alternal", "ganit", _ganit_maps("poc", "alternil", "alternal")),
        ("ganit.poc-symmetril-to-symmetral", "ganit", _ganit_maps("poc", "symmetril", "symmetral")),
    ]
    reg += [
        ("recurrences.decomposition-counts", "recurrences", check_decomposition_counts),
        ("recurrences.g-equivalent-form", "recurrences", _over_words(_equiv_equation)),
        ("recurrences.g-pic-recurrence", "recurrences", _over_words(_pic_recurrence)),
        ("recurrences.g-poc-recurrence", "recurrences", _over_words(_poc_recurrence)),
        ("recurrences.g-pic-star-shuffle", "recurrences", _over_pairs(_intertwine_star)),
        ("recurrences.g-poc-shuffle", "recurrences", _over_pairs(_intertwine_plain)),
        ("recurrences.transfer-pic", "recurrences", _over_pairs(_transfer("pic", True))),
        ("recurrences.transfer-poc", "recurrences", _over_pairs(_transfer("poc", False))),
    ]
    reg += [
        ("appendix.ex-symmetral", "appendix", check_ex_symmetral),
        ("appendix.c-recurrence", "appendix", check_c_recurrence),
        ("appendix.c-mould-independent", "appendix", check_c_independence),
        ("appendix.arit-derivation", "appendix", check_arit_derivation),
        ("appendix.arit-alternality", "appendix", check_arit_alternal),
        ("appendix.expari-expansion", "appendix", check_expari_expansion),
        ("appendix.expari-symmetral", "appendix", check_expari_symmetral),
        ("appendix.logari-alternal", "appendix", check_logari),
    ]
    return reg


REGISTRY = {tid: (suite, fn) for tid, suite, fn in _registry()}

# depth reported per check when it differs from cfg.depth
_FIXED_DEPTH = {
    "appendix.ex-symmetral": APPENDIX_WEIGHT,
    "appendix.c-recurrence": APPENDIX_WEIGHT,
}


def check_ids(suite: str = "all") -> list:
    if suite != "all" and suite not in SUITES:
        raise ValueError("unknown suite %r" % suite)
    return sorted(t for t, (s, _) in REGISTRY.items() if suite == "all" or s == suite)


@dataclass(frozen=True)
class Record:
    theorem: str
    depth: int
    status: str
    witness: str | None = None

    def to_json(self) -> str:
        return json.dumps({"theorem": self.theorem, "depth": self.depth, "status": self.status, "witness": self.witness})

    @classmethod
    def from_json(cls, line: str) -> "Record":
        d = json.loads(line)
        return cls(d["theorem"], d["depth"], d["status"], d["witness"])


def run_check(tid: str, cfg: Config):
    """(Record, seconds) for one check; exceptions become FAIL records."""
    _, fn = REGISTRY[tid]
    t0 = time.perf_counter()
    try:
        ok, wit = fn(cfg)
    except CheckFailed as exc:
        ok, wit = False, str(exc)
    except Exception as exc:  # a crash is a failed check, with the error as witness
        ok, wit = False, "%s: %s" % (type(exc).__name__, exc)
    dt = time.perf_counter() - t0
    rec = Record(tid, _FIXED_DEPTH.get(tid, cfg.depth), "PASS" if ok else "FAIL", _clip(wit) if wit else None)
    return rec, dt


def _run_packed(args):
    return run_check(*args)


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise ValueError("%s must be a positive integer, got %r" % (THREADS_ENV, raw)) from exc
    if n < 1:
        raise ValueError("%s must be >= 1" % THREADS_ENV)
    return n


def run_suite(suite: str, cfg: Config, workers: int | None = None):
    """Run a suite; returns (records sorted by theorem id, {theorem: seconds})."""
    ids = check_ids(suite)
    n = thread_count() if workers is None else workers
    if n <= 1 or len(ids) <= 1:
        results = [run_check(t, cfg) for t in ids]
    else:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_run_packed, [(t, cfg) for t in ids]))
    results.sort(key=lambda rd: rd[0].theorem)
    return [r for r, _ in results], {r.theorem: dt for r, dt in results}


def render_report(records) -> str:
    return "".join(r.to_json() + "\n" for r in records)


def any_failed(records) -> bool:
    return any(r.status == "FAIL" for r in records)


__all__ = [
    "Config",
    "Record",
    "REGISTRY",
    "SUITES",
    "THREADS_ENV",
    "any_failed",
    "check_ids",
    "default_config",
    "render_report",
    "run_check",
    "run_suite",
]
