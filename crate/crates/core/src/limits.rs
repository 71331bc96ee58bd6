/// Enumeration guards shared by the exhaustive procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest domain whose full team space (`2^(2^n)` teams) may be enumerated.
    pub max_vars: usize,
    /// Largest team handed to the team-semantics model checker.
    pub max_team_size: usize,
    /// Largest explicit preferential model (the order is stored as a closure matrix).
    pub max_states: usize,
    /// Variables accepted by the SAT oracle.
    pub max_sat_vars: usize,
    /// Variables accepted by the OLMS decision procedure.
    pub max_olms_vars: usize,
    /// State-index width for exhaustive succinct entailment in classical mode.
    pub max_classical_state_bits: usize,
    /// State-index width for exhaustive succinct entailment in team mode.
    pub max_team_state_bits: usize,
    /// Domain size for team-mode succinct models.
    pub max_team_mode_vars: usize,
    /// State-index width for expanding a succinct model into an explicit one.
    pub max_expand_bits: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vars: 4,
            max_team_size: 16,
            max_states: 4096,
            max_sat_vars: 24,
            max_olms_vars: 20,
            max_classical_state_bits: 16,
            max_team_state_bits: 12,
            max_team_mode_vars: 3,
            max_expand_bits: 10,
        }
    }
}

/// Hard cap on team size for the model checker; subteams are `u64` masks.
pub const MAX_CHECKED_TEAM: usize = 64;
