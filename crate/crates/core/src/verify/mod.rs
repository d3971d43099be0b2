//! Verification harness: reports, deterministic sampling and the checks for
//! homomorphisms, injectivity, covering maps and commutative diagrams.

mod checks;
mod diagrams;
mod report;
mod sampling;

pub use checks::{check_hom, check_injective, find_collisions};
pub use diagrams::{
    check_covering_degree_two, check_covering_square, check_diagram_63, check_diagram_72, check_gamma_isomorphism,
    check_kernel_p4, check_lifted_action, check_p4_hom, check_parity, check_pin4_cover,
};
pub use report::{Outcome, ReportDocument, VerificationReport, MAX_WITNESSES};
pub use sampling::{partition_rng, run_partitioned, PARTITION_SIZE};
