//! Dual certificates for the occupancy LPs and their symbolic verification:
//! slack rational functions, scaled slack polynomials, interval substitution
//! over Q(√15), tight-set extraction and dual re-derivation.

mod certificate;
mod derive;
mod verify;

pub use certificate::{builtin_certificates, builtin_certificate, DualCertificate, CertifyError};
pub use derive::derive_dual_from_tight;
pub use verify::{
    expected_tight_set, scaled_slack, slack, verify_case, verify_config, CaseOptions,
    VerificationReport, Verdict,
};
