//! Circuit intermediate representation: ordered instructions with explicit
//! time steps, detector/observable declarations, and Pauli noise channels.

pub mod elevator;
pub mod memory;
mod noise;
mod text;

pub use elevator::{build_elevator_memory, build_elevator_schedule, ElevatorSpec, LogicalStep, Schedule};
pub use memory::{build_repetition_memory, MemoryBasis};
pub use noise::apply_noise;
pub use text::{circuit_from_text, circuit_to_text};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CircuitError {
    #[error("invalid circuit: {0}")]
    Invalid(String),
    #[error("malformed circuit text at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid noise probability {0}")]
    BadProbability(f64),
    #[error("block order must be a permutation covering every block")]
    BadBlockOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pauli {
    X,
    Z,
}

/// One alternative of an exclusive noise channel: fire these Pauli flips with
/// the given probability.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelAlternative {
    pub probability: f64,
    pub pattern: Vec<(Pauli, u32)>,
}

/// An exclusive Pauli channel: at most one alternative fires per shot.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NoiseChannel {
    pub alternatives: Vec<ChannelAlternative>,
}

impl NoiseChannel {
    pub fn total_probability(&self) -> f64 {
        self.alternatives.iter().map(|a| a.probability).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instruction {
    PrepZ(u32),
    PrepX(u32),
    /// Z-basis measurement; the payload is the global measurement index.
    MeasZ(u32, u32),
    /// X-basis measurement; the payload is the global measurement index.
    MeasX(u32, u32),
    Cnot(u32, u32),
    /// End of a time step. Idle noise insertion is defined per tick.
    Tick,
    Channel(NoiseChannel),
}

/// A full circuit: instructions plus the detector and observable structure
/// that makes memory experiments decodable.
#[derive(Debug, Clone, Default)]
pub struct Circuit {
    pub qubit_count: u32,
    pub instructions: Vec<Instruction>,
    /// Each detector is a set of measurement indices whose parity is
    /// deterministic in the noiseless circuit.
    pub detectors: Vec<Vec<u32>>,
    /// One labelled measurement set per logical observable.
    pub observables: Vec<(String, Vec<u32>)>,
    /// Instruction position at which each inner syndrome-extraction round
    /// starts.
    pub round_markers: Vec<usize>,
}

impl Circuit {
    pub fn measurement_count(&self) -> u32 {
        self.instructions
            .iter()
            .filter(|i| matches!(i, Instruction::MeasZ(..) | Instruction::MeasX(..)))
            .count() as u32
    }

    pub fn cnot_count(&self) -> usize {
        self.instructions
            .iter()
            .filter(|i| matches!(i, Instruction::Cnot(..)))
            .count()
    }

    pub fn inner_rounds(&self) -> usize {
        self.round_markers.len()
    }

    pub fn has_noise(&self) -> bool {
        self.instructions
            .iter()
            .any(|i| matches!(i, Instruction::Channel(_)))
    }

    /// Structural checks: qubit bounds, strictly increasing measurement
    /// indices, detector/observable references in range.
    pub fn validate(&self) -> Result<(), CircuitError> {
        let mut next_meas = 0u32;
        for inst in &self.instructions {
            let check_q = |q: u32| -> Result<(), CircuitError> {
                if q >= self.qubit_count {
                    return Err(CircuitError::Invalid(format!(
                        "qubit {q} out of range ({} qubits)",
                        self.qubit_count
                    )));
                }
                Ok(())
            };
            match inst {
                Instruction::PrepZ(q) | Instruction::PrepX(q) => check_q(*q)?,
                Instruction::MeasZ(q, m) | Instruction::MeasX(q, m) => {
                    check_q(*q)?;
                    if *m != next_meas {
                        return Err(CircuitError::Invalid(format!(
                            "measurement index {m} out of order (expected {next_meas})"
                        )));
                    }
                    next_meas += 1;
                }
                Instruction::Cnot(c, t) => {
                    check_q(*c)?;
                    check_q(*t)?;
                    if c == t {
                        return Err(CircuitError::Invalid("CNOT with equal qubits".into()));
                    }
                }
                Instruction::Tick => {}
                Instruction::Channel(ch) => {
                    let p = ch.total_probability();
                    if !(0.0..=1.0).contains(&p) {
                        return Err(CircuitError::BadProbability(p));
                    }
                    for alt in &ch.alternatives {
                        for &(_, q) in &alt.pattern {
                            check_q(q)?;
                        }
                    }
                }
            }
        }
        for det in &self.detectors {
            for &m in det {
                if m >= next_meas {
                    return Err(CircuitError::Invalid(format!(
                        "detector references measurement {m} (only {next_meas} exist)"
                    )));
                }
            }
        }
        for (_, obs) in &self.observables {
            for &m in obs {
                if m >= next_meas {
                    return Err(CircuitError::Invalid(format!(
                        "observable references measurement {m} (only {next_meas} exist)"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Physical error rates of the biased circuit-level noise model. Y errors
/// are excluded; the bias is eta = p_z / p_x.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    pub p_x: f64,
    pub p_z: f64,
}

impl NoiseModel {
    pub fn new(p_x: f64, p_z: f64) -> Result<Self, CircuitError> {
        for p in [p_x, p_z] {
            if !(0.0..=1.0).contains(&p) || !p.is_finite() {
                return Err(CircuitError::BadProbability(p));
            }
        }
        Ok(NoiseModel { p_x, p_z })
    }

    pub fn zero() -> Self {
        NoiseModel { p_x: 0.0, p_z: 0.0 }
    }

    pub fn eta(&self) -> Option<f64> {
        (self.p_x > 0.0).then(|| self.p_z / self.p_x)
    }
}

/// Resource counts for a built circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resources {
    pub qubits: u32,
    pub inner_rounds: usize,
    pub cnot_count: usize,
}

pub fn count_resources(circuit: &Circuit) -> Resources {
    Resources {
        qubits: circuit.qubit_count,
        inner_rounds: circuit.inner_rounds(),
        cnot_count: circuit.cnot_count(),
    }
}
