//! Bounds, exact search, the `S_y` classification, partition recovery and
//! claim verification.

mod bounds;
mod independence;
mod recover;
mod search;
mod sy;
mod verify;

pub use bounds::{c2_bounds, BoundBracket, Provenance};
pub use independence::{ab_conditions, AbConditions};
pub use recover::{default_delta, measure, recover_partition, Allowance, Recovery, Violations};
pub use search::{c2_exact, Budget, SearchOptions, SearchReport, PRUNED_CAP, RAW_CAP};
pub use sy::{classify_sy, SyClass, SyLabel, AB, AC, AX, BC, BX, CX, FORCING, PAIR_NAMES};
pub use verify::{verify_construction, ClaimCheck, VerifyReport};
