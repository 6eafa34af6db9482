"""Instance constructions that sandwich one domination number by another.

Each builder returns the enlarged graph together with a machine-checkable
claim of the form ``a*base + b  <=  middle  <=  c*base + d``, where the
base quantity is an optimum of the input graph and the middle quantity is
an optimum of the construction under some other variant.
:func:`verify_sandwich` evaluates all three numbers by brute force and also
feeds the construction's own upper-bound witness through the feasibility
checker.

Per-vertex attachment demands follow the shared pattern: glue ``k_v`` extra
neighbours onto a vertex of degree ``d`` so that the fraction of chosen
neighbours it ends up with brackets the target ratio exactly.  Both
bracketing inequalities are asserted with exact rationals at build time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AlphaOutOfRangeError,
    BlockTooSmallError,
    FeasibilityConditionViolatedError,
    IsolatedVertexError,
)
from .exact import DEFAULT_ORACLE_CAP, brute_force_minimum
from .feasibility import is_feasible
from .graph import Graph, build_graph, complete_graph, disjoint_union, join
from .variants import compile_variant, named_variant

__all__ = [
    "SandwichClaim",
    "GadgetOutput",
    "SandwichReport",
    "gadget_replicate",
    "gadget_alpha_domination",
    "gadget_total_alpha",
    "gadget_alpha_rate",
    "gadget_k_domination",
    "verify_sandwich",
]


@dataclass(frozen=True)
class SandwichClaim:
    """One checkable chain: lower <= middle optimum <= upper.

    ``lower`` and ``upper`` are (coefficient, offset) pairs applied to the
    base-variant optimum of the original graph; ``lower`` may be absent for
    upper-bound-only constructions.  ``alpha``/``k`` parameterize the
    middle variant where it needs them.
    """

    base_variant: str
    middle_variant: str
    alpha: Fraction | None
    k: int | None
    lower: tuple[int, int] | None
    upper: tuple[int, int]


@dataclass(frozen=True)
class GadgetOutput:
    """A built construction plus everything needed to check its claim.

    ``embeddings[j][v]`` is the id of base vertex ``v`` inside copy ``j``
    of the construction; ``attachment_demands[v]`` counts the extra
    neighbours glued onto each copy of ``v``; ``attachment_vertices`` are
    the glued-on vertices themselves (the edgeless pool or the clique).
    """

    construction: str
    base: Graph
    gprime: Graph
    embeddings: tuple[tuple[int, ...], ...]
    attachment_demands: tuple[int, ...]
    attachment_vertices: tuple[int, ...]
    claim: SandwichClaim


@dataclass(frozen=True)
class SandwichReport:
    lower: int | None
    middle: int
    upper: int
    passed: bool
    witness_size: int
    witness_feasible: bool


def _validated_alpha(alpha: Fraction | int | str) -> Fraction:
    a = Fraction(alpha)
    if not 0 < a < 1:
        raise AlphaOutOfRangeError(f"constructions need 0 < alpha < 1, got {a}")
    return a


def _reject_isolated(g: Graph) -> None:
    for v in range(g.n):
        if g.degree(v) == 0:
            raise IsolatedVertexError(f"vertex {v} is isolated")


def _open_attachment_demand(alpha: Fraction, d: int) -> int:
    k = math.ceil((alpha * d - 1) / (1 - alpha)) if d >= 2 else 0
    # both sides are identities of the ceiling; checked exactly
    assert Fraction(k, d + k) < alpha <= Fraction(k + 1, d + k)
    return k


def _closed_attachment_demand(alpha: Fraction, d: int) -> int:
    k = math.ceil((alpha * (d + 1) - 1) / (1 - alpha))
    assert k >= 0
    assert Fraction(k, d + k + 1) < alpha <= Fraction(k + 1, d + k + 1)
    return k


def gadget_replicate(g: Graph, copies: int) -> GadgetOutput:
    """Disjoint copies of the graph; the optimum scales by the copy count."""
    if copies < 1:
        raise ValueError("need at least one copy")
    gprime, maps = disjoint_union([g] * copies)
    embeddings = tuple(tuple(mp[v] for v in range(g.n)) for mp in maps)
    claim = SandwichClaim(
        base_variant="domination",
        middle_variant="domination",
        alpha=None,
        k=None,
        lower=(copies, 0),
        upper=(copies, 0),
    )
    return GadgetOutput(
        construction="replicate",
        base=g,
        gprime=gprime,
        embeddings=embeddings,
        attachment_demands=(0,) * g.n,
        attachment_vertices=(),
        claim=claim,
    )


def gadget_alpha_domination(
    g: Graph, alpha: Fraction | int | str, multiplier: int | None = None
) -> GadgetOutput:
    """Attach an edgeless pool so fractional domination brackets domination.

    The pool holds ``multiplier * max_degree`` vertices (multiplier
    defaults to ceil(alpha/(1-alpha))); vertex ``v`` receives its demand's
    worth of pool neighbours round-robin.  Claim:
    base <= middle <= base + pool size.
    """
    a = _validated_alpha(alpha)
    _reject_isolated(g)
    mult = multiplier if multiplier is not None else math.ceil(a / (1 - a))
    if mult < 1:
        raise ValueError("the pool multiplier must be positive")
    pool_size = mult * g.max_degree()
    demands = tuple(_open_attachment_demand(a, g.degree(v)) for v in range(g.n))
    for kv in demands:
        assert kv < pool_size, "a demand reached the whole pool"
    n = g.n
    edges = list(g.edges())
    ptr = 0
    for v in range(n):
        for t in range(demands[v]):
            edges.append((v, n + (ptr + t) % pool_size))
        ptr += demands[v]
    gprime = build_graph(n + pool_size, edges)
    claim = SandwichClaim(
        base_variant="domination",
        middle_variant="alpha-domination",
        alpha=a,
        k=None,
        lower=(1, 0),
        upper=(1, pool_size),
    )
    return GadgetOutput(
        construction="alpha-domination",
        base=g,
        gprime=gprime,
        embeddings=(tuple(range(n)),),
        attachment_demands=demands,
        attachment_vertices=tuple(range(n, n + pool_size)),
        claim=claim,
    )


def _copies_plus_clique(
    g: Graph,
    demands: tuple[int, ...],
    blocks: int,
    copies_per_block: int,
    block_factor: int,
) -> tuple[Graph, tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Shared body: many copies of g wired into a blocked clique.

    Block ``b`` of the clique serves the ``copies_per_block`` copies with
    index ``j // copies_per_block == b``; attachment edges rotate through
    the block so no clique vertex is overloaded.
    """
    n = g.n
    block_size = block_factor * copies_per_block
    top = max(demands, default=0)
    if top > block_size:
        raise BlockTooSmallError(
            f"attachment demand {top} exceeds the block size {block_size}"
        )
    copies = blocks * copies_per_block
    clique_start = copies * n
    clique_size = block_factor * blocks * copies_per_block
    base_edges = list(g.edges())
    edges: list[tuple[int, int]] = []
    embeddings = []
    for j in range(copies):
        off = j * n
        embeddings.append(tuple(off + v for v in range(n)))
        edges.extend((off + u, off + v) for u, v in base_edges)
    clique_end = clique_start + clique_size
    edges.extend(
        (u, v)
        for u in range(clique_start, clique_end)
        for v in range(u + 1, clique_end)
    )
    rotation = [0] * blocks
    for j in range(copies):
        b = j // copies_per_block
        block_base = clique_start + b * block_size
        off = j * n
        for v in range(n):
            kv = demands[v]
            p = rotation[b]
            for t in range(kv):
                edges.append((off + v, block_base + (p + t) % block_size))
            rotation[b] = p + kv
    gprime = build_graph(copies * n + clique_size, edges)
    attachment = tuple(range(clique_start, clique_end))
    return gprime, tuple(embeddings), attachment


def gadget_total_alpha(
    g: Graph,
    alpha: Fraction | int | str,
    blocks: int,
    copies_per_block: int,
    block_factor: int | None = None,
) -> GadgetOutput:
    """Copies-plus-clique construction for total fractional domination.

    ``blocks * copies_per_block`` copies of the graph attach into a clique
    of ``block_factor * blocks * copies_per_block`` vertices split into
    equal blocks (block_factor defaults to ceil(alpha/(1-alpha))).  The
    clique must be big enough relative to the copies it absorbs:
    blocks >= 2*alpha*copies_per_block / ((1-alpha)*block_factor), checked
    exactly.  Claim: copies*base <= middle <= copies*base + clique size.
    """
    a = _validated_alpha(alpha)
    _reject_isolated(g)
    if blocks < 1 or copies_per_block < 1:
        raise ValueError("blocks and copies_per_block must be positive")
    bf = block_factor if block_factor is not None else math.ceil(a / (1 - a))
    if bf < 1:
        raise ValueError("the block factor must be positive")
    if 2 * a * copies_per_block > (1 - a) * bf * blocks:
        raise FeasibilityConditionViolatedError(
            "the clique cannot absorb its copies: need "
            f"blocks >= {2 * a * copies_per_block / ((1 - a) * bf)}, got {blocks}"
        )
    demands = tuple(_open_attachment_demand(a, g.degree(v)) for v in range(g.n))
    gprime, embeddings, attachment = _copies_plus_clique(
        g, demands, blocks, copies_per_block, bf
    )
    copies = blocks * copies_per_block
    claim = SandwichClaim(
        base_variant="total-domination",
        middle_variant="total-alpha-domination",
        alpha=a,
        k=None,
        lower=(copies, 0),
        upper=(copies, len(attachment)),
    )
    return GadgetOutput(
        construction="total-alpha",
        base=g,
        gprime=gprime,
        embeddings=embeddings,
        attachment_demands=demands,
        attachment_vertices=attachment,
        claim=claim,
    )


def gadget_alpha_rate(
    g: Graph,
    alpha: Fraction | int | str,
    blocks: int,
    copies_per_block: int,
    block_factor: int | None = None,
) -> GadgetOutput:
    """Copies-plus-clique construction for the closed-neighbourhood ratio.

    Same shape as :func:`gadget_total_alpha` with the closed-form
    attachment demand and the weaker clique condition
    blocks >= alpha*copies_per_block / ((1-alpha)*block_factor); the base
    quantity is plain domination.
    """
    a = _validated_alpha(alpha)
    _reject_isolated(g)
    if blocks < 1 or copies_per_block < 1:
        raise ValueError("blocks and copies_per_block must be positive")
    bf = block_factor if block_factor is not None else math.ceil(a / (1 - a))
    if bf < 1:
        raise ValueError("the block factor must be positive")
    if a * copies_per_block > (1 - a) * bf * blocks:
        raise FeasibilityConditionViolatedError(
            "the clique cannot absorb its copies: need "
            f"blocks >= {a * copies_per_block / ((1 - a) * bf)}, got {blocks}"
        )
    demands = tuple(_closed_attachment_demand(a, g.degree(v)) for v in range(g.n))
    gprime, embeddings, attachment = _copies_plus_clique(
        g, demands, blocks, copies_per_block, bf
    )
    copies = blocks * copies_per_block
    claim = SandwichClaim(
        base_variant="domination",
        middle_variant="alpha-rate-domination",
        alpha=a,
        k=None,
        lower=(copies, 0),
        upper=(copies, len(attachment)),
    )
    return GadgetOutput(
        construction="alpha-rate",
        base=g,
        gprime=gprime,
        embeddings=embeddings,
        attachment_demands=demands,
        attachment_vertices=attachment,
        claim=claim,
    )


def gadget_k_domination(g: Graph, k: int) -> GadgetOutput:
    """Join a (k-1)-clique onto the graph; k-domination is bounded above.

    Every original vertex gains k-1 universal neighbours, so any
    dominating set of the base plus the whole clique k-dominates the
    result.  Upper bound only: middle <= base + k - 1.
    """
    if k < 1:
        raise ValueError("k must be positive")
    gprime = join(g, complete_graph(k - 1))
    claim = SandwichClaim(
        base_variant="domination",
        middle_variant="k-domination",
        alpha=None,
        k=k,
        lower=None,
        upper=(1, k - 1),
    )
    return GadgetOutput(
        construction="k-domination",
        base=g,
        gprime=gprime,
        embeddings=(tuple(range(g.n)),),
        attachment_demands=(k - 1,) * g.n,
        attachment_vertices=tuple(range(g.n, g.n + k - 1)),
        claim=claim,
    )


def upper_witness(out: GadgetOutput, cap: int = DEFAULT_ORACLE_CAP) -> frozenset[int]:
    """The feasible set each construction's upper bound is built from.

    Always the attachment vertices plus an optimal base solution embedded
    into every copy.
    """
    base_spec = named_variant(out.claim.base_variant)
    base_inst = compile_variant(out.base, base_spec)
    base_opt = brute_force_minimum(base_inst, cap)
    members = set(out.attachment_vertices)
    for emb in out.embeddings:
        members.update(emb[v] for v in base_opt.vertices)
    return frozenset(members)


def verify_sandwich(out: GadgetOutput, cap: int = DEFAULT_ORACLE_CAP) -> SandwichReport:
    """Evaluate the claim's three quantities by brute force.

    ``passed`` covers the inequality chain; the witness check is reported
    separately so a failing witness cannot hide behind a passing chain.

    Raises:
        TooLargeError: either graph exceeds the oracle cap.
    """
    claim = out.claim
    base_inst = compile_variant(out.base, named_variant(claim.base_variant))
    base_size = brute_force_minimum(base_inst, cap).size
    middle_spec = named_variant(claim.middle_variant, alpha=claim.alpha, k=claim.k)
    middle_inst = compile_variant(out.gprime, middle_spec)
    middle_size = brute_force_minimum(middle_inst, cap).size
    lower = None
    if claim.lower is not None:
        coeff, offset = claim.lower
        lower = coeff * base_size + offset
    coeff, offset = claim.upper
    upper = coeff * base_size + offset
    passed = (lower is None or lower <= middle_size) and middle_size <= upper
    witness = upper_witness(out, cap)
    feasible = is_feasible(middle_inst, witness).feasible
    return SandwichReport(
        lower=lower,
        middle=middle_size,
        upper=upper,
        passed=passed,
        witness_size=len(witness),
        witness_feasible=feasible,
    )
