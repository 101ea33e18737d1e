# sabre_mapper/validate/schemas.py

from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from sabre_mapper.constants import EmitForm, HeuristicKind


# ==============================================================================
# 1. Search parameters
# ==============================================================================

class RouterParams(BaseModel):
    """
    Tunables of the SWAP-based heuristic search.
    Defaults: |E|=20, W=0.5, delta=0.001,
    reset every 5 search steps, 5 restarts of 3 traversals.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    extended_set_size: int = Field(20, ge=0)
    lookahead_weight: float = Field(0.5, ge=0.0, lt=1.0)
    decay_delta: float = Field(0.001, ge=0.0)
    decay_reset_interval: int = Field(5, ge=1)
    restarts: int = Field(5, ge=1)
    traversals: int = Field(3, ge=1)
    heuristic: HeuristicKind = HeuristicKind.DECAY

    @field_validator("traversals")
    @classmethod
    def traversals_must_end_forward(cls, v: int) -> int:
        """An even count would finish on the reversed circuit."""
        if v % 2 == 0:
            raise ValueError("traversals must be odd so the last pass is forward.")
        return v


class TraversalPlan(BaseModel):
    """Forward/backward schedule for one restart set."""
    model_config = ConfigDict(frozen=True)

    traversals: int = Field(3, ge=1)
    restarts: int = Field(5, ge=1)
    base_seed: int = Field(0, ge=0)

    @field_validator("traversals")
    @classmethod
    def traversals_must_end_forward(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError("traversals must be odd so the last pass is forward.")
        return v

    @classmethod
    def from_params(cls, params: RouterParams, base_seed: int) -> "TraversalPlan":
        return cls(traversals=params.traversals, restarts=params.restarts, base_seed=base_seed)

    def seeds(self):
        return range(self.base_seed, self.base_seed + self.restarts)

    def is_backward(self, index: int) -> bool:
        """Traversal `index` (0-based) runs over the reversed circuit."""
        return index % 2 == 1


# ==============================================================================
# 2. CLI run configuration
# ==============================================================================

class RunConfig(BaseModel):
    """Everything a `route` or `sweep` invocation needs."""
    model_config = ConfigDict(extra="forbid")

    input_path: str = Field(..., min_length=1)
    coupling: str = Field(..., min_length=1, description="Coupling file path or builtin device name.")
    output_path: Optional[str] = None
    stats_path: Optional[str] = None
    params: RouterParams = Field(default_factory=RouterParams)
    seed: int = Field(0, ge=0)
    emit: EmitForm = EmitForm.DECOMPOSED
    verify: bool = True
    table: bool = False
    workers: int = Field(1, ge=1)
    initial_mapping: Optional[Dict[int, int]] = None


# ==============================================================================
# 3. Results
# ==============================================================================

class RoutingStats(BaseModel):
    """Statistics of one routed circuit."""

    n: int
    N: int
    g_ori: int
    swaps: int
    g_add: int
    g_tot: int
    d_ori: int
    d_out: int
    search_steps: int
    forced_swaps: int = 0
    restarts_used: int = 1
    seed: int = 0
    route_seed: int = 0
    g_first: Optional[int] = None
    runtime_first_ms: Optional[float] = None
    runtime_ms: float = 0.0

    @model_validator(mode="after")
    def gate_arithmetic_must_hold(self) -> "RoutingStats":
        if self.g_add != 3 * self.swaps:
            raise ValueError("g_add must equal 3 x swaps.")
        if self.g_tot != self.g_ori + self.g_add:
            raise ValueError("g_tot must equal g_ori + g_add.")
        return self


class Violation(BaseModel):
    """First gate that breaks compliance or equivalence."""
    gate_id: int
    reason: str


class VerificationReport(BaseModel):
    compliant: bool
    equivalent: bool = False
    final_mapping: Optional[Dict[int, int]] = None
    first_violation: Optional[Violation] = None
    swaps_folded: int = 0

    @model_validator(mode="after")
    def equivalence_implies_compliance(self) -> "VerificationReport":
        if self.equivalent and not self.compliant:
            raise ValueError("An equivalent report must also be compliant.")
        return self

    @property
    def ok(self) -> bool:
        return self.compliant and self.equivalent


class SweepRow(BaseModel):
    delta: float
    g_tot: int
    g_add: int
    depth: int
    g_tot_norm: float
    depth_norm: float
