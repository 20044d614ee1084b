//! Rotating (interaction) frame transformation of lab-frame drive fields.
//!
//! Absorbing the free Hamiltonian `omega0 Sz` rotates the drive fields in
//! the x-y plane by `theta = omega0 t` (hbar = 1); with the transformed
//! fields the qubit frequency drops out entirely.

/// Lab-frame drive fields and the point in time to transform at.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LabFrameField {
    pub eps_x: f64,
    pub eps_y: f64,
    pub omega0: f64,
    pub t: f64,
}

/// Interaction-frame fields `(eps_x~, eps_y~)`; preserves the Euclidean norm
/// of `(eps_x, eps_y)`.
pub fn to_interaction_frame(field: &LabFrameField) -> (f64, f64) {
    let theta = field.omega0 * field.t;
    let (s, c) = theta.sin_cos();
    (
        field.eps_x * c + field.eps_y * s,
        field.eps_y * c - field.eps_x * s,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_2;

    #[test]
    fn identity_rotation() {
        let f = LabFrameField {
            eps_x: 1.0,
            eps_y: 0.0,
            omega0: 0.0,
            t: 3.7,
        };
        assert_eq!(to_interaction_frame(&f), (1.0, 0.0));
    }

    #[test]
    fn quarter_period() {
        let f = LabFrameField {
            eps_x: 1.0,
            eps_y: 0.0,
            omega0: FRAC_PI_2,
            t: 1.0,
        };
        let (x, y) = to_interaction_frame(&f);
        assert!(x.abs() < 1e-15);
        assert!((y + 1.0).abs() < 1e-15);
    }

    #[test]
    fn matches_rotation_matrix_oracle() {
        // Independent oracle: multiply by the 2x2 rotation matrix R(-theta).
        let f = LabFrameField {
            eps_x: 0.6,
            eps_y: 0.8,
            omega0: 1.0,
            t: 1.0,
        };
        let theta = f.omega0 * f.t;
        let rot = [
            [theta.cos(), theta.sin()],
            [-theta.sin(), theta.cos()],
        ];
        let expect = (
            rot[0][0] * f.eps_x + rot[0][1] * f.eps_y,
            rot[1][0] * f.eps_x + rot[1][1] * f.eps_y,
        );
        let (x, y) = to_interaction_frame(&f);
        assert!((x - expect.0).abs() < 1e-15);
        assert!((y - expect.1).abs() < 1e-15);
        let norm = x.hypot(y);
        assert!((norm - 1.0).abs() < 1e-14);
    }
}
