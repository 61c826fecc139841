"""Toolkit for reduced Collatz iteration.

Forward and reverse odd-to-odd trajectories with explicit halving
exponents, exact fractional-sum encodings, closed-form generators of
numbers with prescribed descent lengths, bounded loop-candidate search,
residue-steered reverse iteration, and Collatz-graph construction with
DOT/JSON export.  All arithmetic is exact and arbitrary precision.
"""

from .arith import pow2, pow3, ratio_eval_sum, v2
from .engine import (
    CAP_HIT,
    REACHED_ONE,
    REACHED_TARGET,
    ExponentTrace,
    IterationCapHit,
    StopReason,
    collatz_f,
    cross_check,
    reduced_step,
    sequence_length,
    trace,
)
from .fsn import (
    FractionalSumForm,
    NonIntegerForm,
    NotOddPositive,
    encode_fsn,
    encode_ifsn,
    eval_form,
    even_lift,
)
from .generate import (
    additive_jump,
    additive_next,
    enumerate_length2,
    gen_length1,
    gen_length2,
    gen_monotonic,
)
from .loops import (
    LoopCandidate,
    Rejection,
    RejectionKind,
    length2_feasible_pairs,
    loop_candidate,
    loop_form_check,
    loop_member_equation,
    search_loops,
)
from .reverse import (
    ClassThree,
    ParityMismatch,
    PreimageTag,
    ReverseDomainError,
    level0_partition,
    mod6_classify,
    mod6_power_lemmas,
    r1,
    r5,
    resolve,
    reverse_step,
    rr1,
    rr5,
    x_fn,
    x_recursion_check,
)
from .graph import (
    FORMULA_SWEEP,
    REVERSE_BFS,
    CollatzGraph,
    DuplicateSource,
    InvalidEdge,
    SweepPlan,
    build_reverse_bfs,
    build_sweep,
    is_one_tree,
    replay_pairs,
)
from .verify import VerifyReport, run_all, run_check

__version__ = "0.1.0"
