//! Insertion of the biased circuit-level noise model.
//!
//! Locations and probabilities:
//!   - after PrepZ and before MeasZ: X with p_x
//!   - after PrepX and before MeasX: Z with p_z
//!   - after each CNOT: one of IZ, ZI, ZZ each with p_z/3 and one of
//!     IX, XI, XX each with p_x/3, as a single exclusive channel
//!   - per tick, every qubit not acted on in that tick: Z with p_z or
//!     X with p_x, exclusive

use super::{ChannelAlternative, Circuit, Instruction, NoiseChannel, NoiseModel, Pauli};

fn single(p: f64, pauli: Pauli, q: u32) -> NoiseChannel {
    NoiseChannel {
        alternatives: vec![ChannelAlternative {
            probability: p,
            pattern: vec![(pauli, q)],
        }],
    }
}

fn idle_channel(noise: &NoiseModel, q: u32) -> NoiseChannel {
    NoiseChannel {
        alternatives: vec![
            ChannelAlternative {
                probability: noise.p_z,
                pattern: vec![(Pauli::Z, q)],
            },
            ChannelAlternative {
                probability: noise.p_x,
                pattern: vec![(Pauli::X, q)],
            },
        ],
    }
}

fn cnot_channel(noise: &NoiseModel, c: u32, t: u32) -> NoiseChannel {
    let z3 = noise.p_z / 3.0;
    let x3 = noise.p_x / 3.0;
    NoiseChannel {
        alternatives: vec![
            ChannelAlternative {
                probability: z3,
                pattern: vec![(Pauli::Z, t)],
            },
            ChannelAlternative {
                probability: z3,
                pattern: vec![(Pauli::Z, c)],
            },
            ChannelAlternative {
                probability: z3,
                pattern: vec![(Pauli::Z, c), (Pauli::Z, t)],
            },
            ChannelAlternative {
                probability: x3,
                pattern: vec![(Pauli::X, t)],
            },
            ChannelAlternative {
                probability: x3,
                pattern: vec![(Pauli::X, c)],
            },
            ChannelAlternative {
                probability: x3,
                pattern: vec![(Pauli::X, c), (Pauli::X, t)],
            },
        ],
    }
}

/// Annotate a noiseless circuit with the noise model. Returns the input
/// unchanged when both rates are zero.
pub fn apply_noise(circuit: &Circuit, noise: &NoiseModel) -> Circuit {
    if noise.p_x == 0.0 && noise.p_z == 0.0 {
        return circuit.clone();
    }
    let mut out = Circuit {
        qubit_count: circuit.qubit_count,
        instructions: Vec::with_capacity(circuit.instructions.len() * 2),
        detectors: circuit.detectors.clone(),
        observables: circuit.observables.clone(),
        round_markers: Vec::with_capacity(circuit.round_markers.len()),
    };
    let mut acted = vec![false; circuit.qubit_count as usize];
    let mut tick_dirty = false;
    let mut marker_iter = circuit.round_markers.iter().peekable();

    let mut flush_idle = |out: &mut Circuit, acted: &mut [bool], dirty: &mut bool| {
        if *dirty {
            for (q, a) in acted.iter_mut().enumerate() {
                if !*a {
                    out.instructions
                        .push(Instruction::Channel(idle_channel(noise, q as u32)));
                }
                *a = false;
            }
            *dirty = false;
        } else {
            acted.fill(false);
        }
    };

    for (pos, inst) in circuit.instructions.iter().enumerate() {
        while marker_iter.peek() == Some(&&pos) {
            marker_iter.next();
            out.round_markers.push(out.instructions.len());
        }
        match inst {
            Instruction::PrepZ(q) => {
                acted[*q as usize] = true;
                tick_dirty = true;
                out.instructions.push(inst.clone());
                out.instructions
                    .push(Instruction::Channel(single(noise.p_x, Pauli::X, *q)));
            }
            Instruction::PrepX(q) => {
                acted[*q as usize] = true;
                tick_dirty = true;
                out.instructions.push(inst.clone());
                out.instructions
                    .push(Instruction::Channel(single(noise.p_z, Pauli::Z, *q)));
            }
            Instruction::MeasZ(q, _) => {
                acted[*q as usize] = true;
                tick_dirty = true;
                out.instructions
                    .push(Instruction::Channel(single(noise.p_x, Pauli::X, *q)));
                out.instructions.push(inst.clone());
            }
            Instruction::MeasX(q, _) => {
                acted[*q as usize] = true;
                tick_dirty = true;
                out.instructions
                    .push(Instruction::Channel(single(noise.p_z, Pauli::Z, *q)));
                out.instructions.push(inst.clone());
            }
            Instruction::Cnot(c, t) => {
                acted[*c as usize] = true;
                acted[*t as usize] = true;
                tick_dirty = true;
                out.instructions.push(inst.clone());
                out.instructions
                    .push(Instruction::Channel(cnot_channel(noise, *c, *t)));
            }
            Instruction::Tick => {
                flush_idle(&mut out, &mut acted, &mut tick_dirty);
                out.instructions.push(Instruction::Tick);
            }
            Instruction::Channel(_) => {
                out.instructions.push(inst.clone());
            }
        }
    }
    // A trailing partial tick still costs idle time.
    flush_idle(&mut out, &mut acted, &mut tick_dirty);
    while let Some(&m) = marker_iter.next() {
        debug_assert!(m <= circuit.instructions.len());
        out.round_markers.push(out.instructions.len());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_noise_is_identity() {
        let mut c = Circuit {
            qubit_count: 2,
            ..Default::default()
        };
        c.instructions.push(Instruction::Cnot(0, 1));
        c.instructions.push(Instruction::Tick);
        let out = apply_noise(&c, &NoiseModel::zero());
        assert_eq!(out.instructions, c.instructions);
    }

    #[test]
    fn single_cnot_gets_six_alternatives() {
        let mut c = Circuit {
            qubit_count: 2,
            ..Default::default()
        };
        c.instructions.push(Instruction::Cnot(0, 1));
        c.instructions.push(Instruction::Tick);
        let noise = NoiseModel::new(0.001, 0.006).unwrap();
        let out = apply_noise(&c, &noise);
        let channels: Vec<&NoiseChannel> = out
            .instructions
            .iter()
            .filter_map(|i| match i {
                Instruction::Channel(ch) => Some(ch),
                _ => None,
            })
            .collect();
        assert_eq!(channels.len(), 1);
        let ch = channels[0];
        assert_eq!(ch.alternatives.len(), 6);
        let z_probs: Vec<f64> = ch.alternatives[..3].iter().map(|a| a.probability).collect();
        let x_probs: Vec<f64> = ch.alternatives[3..].iter().map(|a| a.probability).collect();
        for p in z_probs {
            assert!((p - 0.002).abs() < 1e-15);
        }
        for p in x_probs {
            assert!((p - 0.001 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn idle_qubit_gets_exclusive_xz_channel() {
        let mut c = Circuit {
            qubit_count: 2,
            ..Default::default()
        };
        c.instructions.push(Instruction::PrepZ(0));
        c.instructions.push(Instruction::Tick);
        let noise = NoiseModel::new(0.001, 0.006).unwrap();
        let out = apply_noise(&c, &noise);
        let idle: Vec<&NoiseChannel> = out
            .instructions
            .iter()
            .filter_map(|i| match i {
                Instruction::Channel(ch) if ch.alternatives.len() == 2 => Some(ch),
                _ => None,
            })
            .collect();
        assert_eq!(idle.len(), 1);
        assert_eq!(idle[0].alternatives[0].pattern, vec![(Pauli::Z, 1)]);
        assert_eq!(idle[0].alternatives[1].pattern, vec![(Pauli::X, 1)]);
    }
}
