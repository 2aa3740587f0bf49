//! Exact structure theory for integer sets with small sumset doubling.
//!
//! The library provides integer-set arithmetic with a bitset sumset kernel,
//! the density/anti-symmetry/additive-minimality predicates on hosted sets,
//! order-2 Freiman-isomorphism search (including K₆ recognition),
//! bi-arithmetic-progression decomposition, a certificate-producing
//! classifier for critical sets (|2A| = 3|A|−3), and an exhaustive
//! enumeration harness that verifies the classification and the surrounding
//! theorems over every normalized set up to a configurable span.
//!
//! All values are immutable and all operations are pure functions, so
//! everything is safe to share across worker threads.

pub mod biap;
pub mod bitset;
pub mod classify;
pub mod error;
pub mod harness;
pub mod intset;
pub mod iso;
pub mod parse;
pub mod predicates;

pub use biap::{biap_decompositions, is_biap, BiApWitness, Progression};
pub use classify::{
    check_bardaji_grynkiewicz, check_theorem, classify, classify_normalized, delta,
    generate_forms, recognize_s, recognize_t, CaseReport, Classification, FamilyFilter,
    FormWitness, LongInterval, SWitness, TWitness, TheoremId, TheoremVerdict,
};
pub use error::{Error, Result};
pub use harness::{
    enumerate_normalized, run_census, run_verification, CensusReport, HarnessConfig, SpanRow,
    VerificationFailure, Violation,
};
pub use intset::{
    AffineMap, DoublingProfile, IntSet, NormalizedSet, Regime, SumsetFrontiers,
};
pub use iso::{find_isomorphism, k6_witness, IsoWitness, K6Witness, SumPartition, K6_POINTS};
pub use parse::{format_set, parse_set, parse_set_arg};
pub use predicates::{HoleTaxonomy, HostedSet, Side, StabilityFrontiers};
