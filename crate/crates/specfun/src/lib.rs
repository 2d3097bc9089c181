//! Complete elliptic integrals (parameter convention `m`, negative `m`
//! allowed) via Carlson symmetric forms, and Bessel functions `J_k` of
//! integer order via normalized backward recurrence.

mod bessel;
mod carlson;
mod elliptic;

pub use bessel::bessel_J;
pub use carlson::{carlson_rc, carlson_rd, carlson_rf, carlson_rj};
pub use elliptic::{complete_elliptic_E, complete_elliptic_K, complete_elliptic_Pi};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("parameter m = {0} > 1")]
    ParameterAboveOne(f64),
    #[error("characteristic n = {0} >= 1 (principal value not supported)")]
    CharacteristicAtLeastOne(f64),
    #[error("non-finite argument")]
    NonFinite,
}
