//! Construction, circuit-level simulation, decoding and resource analysis of
//! concatenated repetition codes ("elevator codes") for biased-noise qubits,
//! alongside reference models for thin surface and XZZX codes.

pub mod circuit;
pub mod codes;
pub mod decoder;
pub mod experiments;
pub mod gf2;
pub mod real;
pub mod sim;

pub use real::Real;

/// Default scalar for soft-decision arithmetic.
pub type Scalar = f64;

/// BP+OSD decoder over the default scalar.
pub type Decoder = decoder::BpOsd<Scalar>;
