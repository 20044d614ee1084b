//! Pathway queries, complex pathway amplitudes, the single-pulse closed form,
//! and the conjugation law relating the four transitions.
//!
//! In a two-level system a pathway is fully determined by its start state,
//! end state and order: the intermediate states alternate. Even transitions
//! (0->0, 1->1) admit only even orders and odd transitions (0->1, 1->0) only
//! odd orders; every amplitude operation returns exactly zero for a
//! parity-mismatched query.

use num_complex::Complex64;

use crate::error::{MechError, Result};
use crate::numeric::dd::{factorial_dd, Cdd, Dd};
use crate::numeric::{ln_factorial, wrap_angle};
use crate::pulse::Pulse;

/// Eigenstate label of the two-level system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum State {
    Zero,
    One,
}

impl State {
    #[inline]
    pub fn index(self) -> usize {
        match self {
            State::Zero => 0,
            State::One => 1,
        }
    }

    #[inline]
    pub fn flipped(self) -> State {
        match self {
            State::Zero => State::One,
            State::One => State::Zero,
        }
    }

    pub fn from_char(c: char) -> Result<State> {
        match c {
            '0' => Ok(State::Zero),
            '1' => Ok(State::One),
            _ => Err(MechError::InvalidTransition(c.to_string())),
        }
    }
}

/// One pathway: initial state `a`, final state `b`, order `N`.
///
/// Parity-mismatched queries are legal and evaluate to exactly zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathwayQuery {
    pub initial: State,
    pub final_state: State,
    pub order: u32,
}

impl PathwayQuery {
    pub fn new(initial: State, final_state: State, order: u32) -> PathwayQuery {
        PathwayQuery {
            initial,
            final_state,
            order,
        }
    }

    /// Parse a transition label `"ba"` (`U_ba`: first character is the final
    /// state) plus an order.
    pub fn from_label(label: &str, order: u32) -> Result<PathwayQuery> {
        let mut chars = label.chars();
        let (b, a) = match (chars.next(), chars.next(), chars.next()) {
            (Some(b), Some(a), None) => (State::from_char(b)?, State::from_char(a)?),
            _ => return Err(MechError::InvalidTransition(label.to_string())),
        };
        Ok(PathwayQuery::new(a, b, order))
    }

    /// The `"ba"` transition label, final state first.
    pub fn label(&self) -> &'static str {
        match (self.final_state, self.initial) {
            (State::Zero, State::Zero) => "00",
            (State::Zero, State::One) => "01",
            (State::One, State::Zero) => "10",
            (State::One, State::One) => "11",
        }
    }

    /// True iff the transition parity matches the order parity, i.e. the
    /// amplitude can be nonzero.
    #[inline]
    pub fn parity_valid(&self) -> bool {
        let flip = self.initial != self.final_state;
        flip == (self.order % 2 == 1)
    }
}

/// A pathway amplitude: complex value plus a log-magnitude representation
/// that survives underflow of `tau^N / N!` at large `N`.
///
/// `log_magnitude` is `None` exactly when the amplitude is zero. When the
/// value is representable the two representations agree:
/// `|exp(log_magnitude) - |value|| <= 1e-12 * max(1, |value|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexAmplitude {
    value: Complex64,
    log_magnitude: Option<f64>,
    phase: f64,
}

impl ComplexAmplitude {
    pub fn zero() -> ComplexAmplitude {
        ComplexAmplitude {
            value: Complex64::new(0.0, 0.0),
            log_magnitude: None,
            phase: 0.0,
        }
    }

    pub fn one() -> ComplexAmplitude {
        ComplexAmplitude {
            value: Complex64::new(1.0, 0.0),
            log_magnitude: Some(0.0),
            phase: 0.0,
        }
    }

    pub fn from_value(value: Complex64) -> ComplexAmplitude {
        let mag = value.norm();
        ComplexAmplitude {
            value,
            log_magnitude: if mag > 0.0 { Some(mag.ln()) } else { None },
            phase: if mag > 0.0 { value.arg() } else { 0.0 },
        }
    }

    /// Build from `ln|value|` and `arg(value)`; the linear value underflows
    /// to zero (or overflows to infinity) honestly.
    pub fn from_log_polar(log_magnitude: f64, phase: f64) -> ComplexAmplitude {
        let phase = wrap_angle(phase);
        ComplexAmplitude {
            value: Complex64::from_polar(log_magnitude.exp(), phase),
            log_magnitude: Some(log_magnitude),
            phase,
        }
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        self.value
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.value.re
    }

    #[inline]
    pub fn im(&self) -> f64 {
        self.value.im
    }

    #[inline]
    pub fn log_magnitude(&self) -> Option<f64> {
        self.log_magnitude
    }

    #[inline]
    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn magnitude(&self) -> f64 {
        self.value.norm()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.log_magnitude.is_none()
    }

    /// Complex conjugate; exact sign flips on the stored value.
    pub fn conjugated(&self) -> ComplexAmplitude {
        ComplexAmplitude {
            value: self.value.conj(),
            log_magnitude: self.log_magnitude,
            phase: wrap_angle(-self.phase),
        }
    }

    /// Negated conjugate `-conj(z)`; exact sign flips.
    pub fn neg_conjugated(&self) -> ComplexAmplitude {
        ComplexAmplitude {
            value: Complex64::new(-self.value.re, self.value.im),
            log_magnitude: self.log_magnitude,
            phase: if self.log_magnitude.is_some() {
                wrap_angle(core::f64::consts::PI - self.phase)
            } else {
                0.0
            },
        }
    }
}

/// Derive `(U11^N, U01^N)` from directly computed `(U00^N, U10^N)` via the
/// sequence-independent conjugation law `U00 = conj(U11)`, `U10 = -conj(U01)`.
pub fn conjugate_amplitudes(
    u00: ComplexAmplitude,
    u10: ComplexAmplitude,
) -> (ComplexAmplitude, ComplexAmplitude) {
    (u00.conjugated(), u10.neg_conjugated())
}

// Overflow/underflow guards for the exact double-double path; beyond these
// the log-domain path takes over.
pub(crate) const EXACT_MAX_ORDER: u32 = 170;
pub(crate) const EXACT_LN_TERM_LIMIT: f64 = 650.0;
pub(crate) const EXACT_LN_UNDERFLOW: f64 = -680.0;

pub(crate) fn exact_regime(order: u32, max_abs_tau: f64) -> bool {
    if order > EXACT_MAX_ORDER {
        return false;
    }
    let n = f64::from(order);
    let ln_tau = max_abs_tau.ln(); // max_abs_tau > 0 here
    if ln_tau > 0.0 && n * ln_tau >= EXACT_LN_TERM_LIMIT {
        return false;
    }
    n * (ln_tau - core::f64::consts::LN_2) - ln_factorial(order) > EXACT_LN_UNDERFLOW
}

/// Mechanism of a single constant pulse: the closed form
/// `U^N = (1/N!) (-i/2)^N tau^N * {1, e^{i phi}, e^{-i phi}}` for the even,
/// 0->1, and 1->0 transitions respectively; exactly zero on parity mismatch
/// and `delta_ab` at `N = 0`.
pub fn single_pulse_amplitude(pulse: &Pulse, query: &PathwayQuery) -> ComplexAmplitude {
    if !query.parity_valid() {
        return ComplexAmplitude::zero();
    }
    let n = query.order;
    if n == 0 {
        return ComplexAmplitude::one();
    }
    let tau = pulse.tau();
    if tau == 0.0 {
        return ComplexAmplitude::zero();
    }

    let odd = n % 2 == 1;
    if exact_regime(n, tau) {
        let half = Dd::from_f64(tau * 0.5);
        let mag = half.powi(n).div(factorial_dd(n));
        let factor = if odd {
            let c = Cdd::from_complex(Complex64::from_polar(1.0, pulse.phi()));
            match query.initial {
                State::Zero => c,
                State::One => c.conj(),
            }
        } else {
            Cdd::ONE
        };
        ComplexAmplitude::from_value(factor.scale(mag).rotate_neg_i_pow(n).to_complex())
    } else {
        let ln_mag = f64::from(n) * (tau * 0.5).ln() - ln_factorial(n);
        let sign_phase = if odd {
            match query.initial {
                State::Zero => pulse.phi(),
                State::One => -pulse.phi(),
            }
        } else {
            0.0
        };
        let phase = sign_phase - core::f64::consts::FRAC_PI_2 * f64::from(n % 4);
        ComplexAmplitude::from_log_polar(ln_mag, phase)
    }
}
