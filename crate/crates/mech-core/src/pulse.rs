//! Pulses and pulse sequences.
//!
//! A pulse is one constant segment of the control, fully specified by its
//! dimensionless width `tau` (duration times Rabi frequency, in radians of
//! rotation) and its drive phase `phi` (axis angle in the x-y plane of the
//! rotating frame).

use crate::error::{MechError, Result};

/// One constant control segment: width `tau >= 0`, phase `phi`.
///
/// The phase is canonicalized to `[0, 2pi)` at construction; all formulas
/// consume the stored value directly. Amplitudes are invariant under
/// `phi -> phi + 2pi` up to f64 rounding of the reduction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pulse {
    tau: f64,
    phi: f64,
}

impl Pulse {
    pub fn new(tau: f64, phi: f64) -> Result<Pulse> {
        if !tau.is_finite() {
            return Err(MechError::NonFinite {
                field: "tau",
                value: tau,
            });
        }
        if tau < 0.0 {
            return Err(MechError::NegativeWidth {
                field: "tau",
                value: tau,
            });
        }
        if !phi.is_finite() {
            return Err(MechError::NonFinite {
                field: "phi",
                value: phi,
            });
        }
        Ok(Pulse {
            tau,
            phi: canonical_phase(phi),
        })
    }

    /// Pulse width (area), radians.
    #[inline]
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Drive phase in `[0, 2pi)`.
    #[inline]
    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Reduce an angle to `[0, 2pi)`.
pub fn canonical_phase(phi: f64) -> f64 {
    let p = phi.rem_euclid(core::f64::consts::TAU);
    // rem_euclid of a tiny negative input can round up to exactly 2pi
    if p >= core::f64::consts::TAU {
        0.0
    } else {
        p
    }
}

/// An ordered piecewise-constant control of `M >= 1` pulses; pulse 1 acts first.
#[derive(Clone, Debug, PartialEq)]
pub struct PulseSequence {
    pulses: Vec<Pulse>,
}

impl PulseSequence {
    pub fn new(pulses: Vec<Pulse>) -> Result<PulseSequence> {
        if pulses.is_empty() {
            return Err(MechError::EmptySequence);
        }
        let total: f64 = pulses.iter().map(Pulse::tau).sum();
        if !total.is_finite() {
            return Err(MechError::NonFinite {
                field: "total width",
                value: total,
            });
        }
        Ok(PulseSequence { pulses })
    }

    /// Convenience constructor from `(tau, phi)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<PulseSequence> {
        let pulses = pairs
            .iter()
            .map(|&(tau, phi)| Pulse::new(tau, phi))
            .collect::<Result<Vec<_>>>()?;
        PulseSequence::new(pulses)
    }

    #[inline]
    pub fn pulses(&self) -> &[Pulse] {
        &self.pulses
    }

    /// Number of pulses `M`.
    #[inline]
    pub fn len(&self) -> usize {
        self.pulses.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false // M >= 1 by construction
    }

    /// Total width, the sum of all pulse areas.
    pub fn total_width(&self) -> f64 {
        self.pulses.iter().map(Pulse::tau).sum()
    }
}
