//! Gas model and conversions between conservative and primitive states.
//!
//! Nondimensional solver units: density and velocity carry the case scales,
//! pressure follows from the ideal-gas relation, and temperature is defined
//! as T = p/rho so that the inverse-temperature parameter of the equilibrium
//! distribution is lambda = rho/(2 p) = 1/(2 T).

use crate::error::{Result, SolverError};
use crate::real::Real;

/// Conservative 5-vector (rho, rho U, rho V, rho W, rho E).
pub type Cons<R> = [R; 5];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimState<R> {
    pub rho: R,
    pub u: R,
    pub v: R,
    pub w: R,
    pub p: R,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ViscosityLaw<R> {
    Constant { mu: R },
    /// mu = mu_w (T/T_w)^exponent with T = p/rho.
    PowerLaw { mu_w: R, t_w: R, exponent: R },
}

#[derive(Debug, Clone, Copy)]
pub struct GasModel<R> {
    pub gamma: R,
    /// Internal degrees of freedom, K = (5 - 3 gamma)/(gamma - 1).
    pub k_dof: R,
    pub prandtl: R,
    pub viscosity: ViscosityLaw<R>,
    /// Apply the heat-flux correction for Prandtl numbers away from one.
    pub prandtl_fix: bool,
}

impl<R: Real> GasModel<R> {
    pub fn new(gamma: R, prandtl: R, viscosity: ViscosityLaw<R>) -> Result<Self> {
        let one = R::one();
        let two = R::of(2.0);
        if !(gamma > one && gamma <= two) {
            return Err(SolverError::Config(format!(
                "specific-heat ratio {gamma} outside (1, 2]"
            )));
        }
        if !(prandtl > R::zero()) {
            return Err(SolverError::Config(format!(
                "Prandtl number {prandtl} must be positive"
            )));
        }
        let k_dof = (R::of(5.0) - R::of(3.0) * gamma) / (gamma - one);
        if k_dof < -R::of(1e-12) {
            return Err(SolverError::Config(format!(
                "gamma = {gamma} implies negative internal degrees of freedom"
            )));
        }
        Ok(GasModel {
            gamma,
            k_dof: k_dof.max(R::zero()),
            prandtl,
            viscosity,
            prandtl_fix: true,
        })
    }

    /// Dynamic viscosity at temperature T = p/rho.
    #[inline]
    pub fn mu(&self, temperature: R) -> R {
        match self.viscosity {
            ViscosityLaw::Constant { mu } => mu,
            ViscosityLaw::PowerLaw { mu_w, t_w, exponent } => {
                mu_w * (temperature / t_w).powf(exponent)
            }
        }
    }

    #[inline]
    pub fn sound_speed(&self, rho: R, p: R) -> R {
        (self.gamma * p / rho).sqrt()
    }
}

/// rho E from primitive variables.
#[inline]
pub fn total_energy<R: Real>(prim: &PrimState<R>, gamma: R) -> R {
    prim.p / (gamma - R::one())
        + R::of(0.5) * prim.rho * (prim.u * prim.u + prim.v * prim.v + prim.w * prim.w)
}

#[inline]
pub fn prim_to_cons<R: Real>(prim: &PrimState<R>, gm: &GasModel<R>) -> Cons<R> {
    [
        prim.rho,
        prim.rho * prim.u,
        prim.rho * prim.v,
        prim.rho * prim.w,
        total_energy(prim, gm.gamma),
    ]
}

/// Reason a conservative state failed validation; callers attach locations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BadState {
    NonPositiveDensity,
    NonPositiveInternalEnergy,
    NonFinite,
}

impl BadState {
    pub fn describe(self) -> &'static str {
        match self {
            BadState::NonPositiveDensity => "non-positive density",
            BadState::NonPositiveInternalEnergy => "non-positive internal energy",
            BadState::NonFinite => "non-finite value",
        }
    }
}

/// Internal energy density rho e = rho E - |rho U|^2 / (2 rho).
#[inline]
pub fn internal_energy<R: Real>(q: &Cons<R>) -> R {
    q[4] - R::of(0.5) * (q[1] * q[1] + q[2] * q[2] + q[3] * q[3]) / q[0]
}

#[inline]
pub fn check_state<R: Real>(q: &Cons<R>) -> std::result::Result<(), BadState> {
    if !q.iter().all(|x| x.is_finite()) {
        return Err(BadState::NonFinite);
    }
    if q[0] <= R::zero() {
        return Err(BadState::NonPositiveDensity);
    }
    if internal_energy(q) <= R::zero() {
        return Err(BadState::NonPositiveInternalEnergy);
    }
    Ok(())
}

#[inline]
pub fn cons_to_prim<R: Real>(
    q: &Cons<R>,
    gm: &GasModel<R>,
) -> std::result::Result<PrimState<R>, BadState> {
    check_state(q)?;
    let inv_rho = R::one() / q[0];
    Ok(PrimState {
        rho: q[0],
        u: q[1] * inv_rho,
        v: q[2] * inv_rho,
        w: q[3] * inv_rho,
        p: (gm.gamma - R::one()) * internal_energy(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn air() -> GasModel<f64> {
        GasModel::new(1.4, 1.0, ViscosityLaw::Constant { mu: 0.0 }).unwrap()
    }

    #[test]
    fn k_dof_consistency() {
        let gm = air();
        assert!((gm.k_dof - 3.0).abs() < 1e-12);
        let mono = GasModel::new(5.0 / 3.0, 1.0, ViscosityLaw::Constant { mu: 0.0 }).unwrap();
        assert!(mono.k_dof.abs() < 1e-12);
        assert!(GasModel::new(1.0, 1.0, ViscosityLaw::Constant { mu: 0.0f64 }).is_err());
        assert!(GasModel::new(2.5, 1.0, ViscosityLaw::Constant { mu: 0.0f64 }).is_err());
    }

    #[test]
    fn zero_velocity_identity() {
        let gm = air();
        let prim = cons_to_prim(&[1.0, 0.0, 0.0, 0.0, 2.5], &gm).unwrap();
        assert_eq!(prim.rho, 1.0);
        assert_eq!(prim.u, 0.0);
        assert!((prim.p - 1.0).abs() < 1e-15);
    }

    #[test]
    fn moving_state_hand_value() {
        let gm = air();
        let prim = cons_to_prim(&[1.0, 1.0, 0.0, 0.0, 3.0], &gm).unwrap();
        assert!((prim.u - 1.0).abs() < 1e-15);
        // p = 0.4 * (3.0 - 0.5) = 1.0
        assert!((prim.p - 1.0).abs() < 1e-15);
    }

    #[test]
    fn tgv_reference_point() {
        // TGV point (pi/2, 0, 0): U = 1, p = p0 = rho0 c0^2 / gamma with c0 = 10.
        let gm = air();
        let p0 = 100.0 / 1.4;
        let prim = PrimState { rho: 1.0, u: 1.0, v: 0.0, w: 0.0, p: p0 };
        let q = prim_to_cons(&prim, &gm);
        let back = cons_to_prim(&q, &gm).unwrap();
        assert!((back.p - 71.42857142857143).abs() / p0 < 1e-14);
        assert!((back.u - 1.0).abs() < 1e-14);
    }

    #[test]
    fn round_trip_tight() {
        let gm = air();
        let prim = PrimState { rho: 0.93, u: -1.7, v: 0.42, w: 2.1, p: 17.3 };
        let q = prim_to_cons(&prim, &gm);
        let back = cons_to_prim(&q, &gm).unwrap();
        assert!((back.rho - prim.rho).abs() / prim.rho < 1e-14);
        assert!((back.u - prim.u).abs() / prim.u.abs() < 1e-14);
        assert!((back.p - prim.p).abs() / prim.p < 1e-14);
    }

    #[test]
    fn invalid_states_rejected() {
        let gm = air();
        assert_eq!(
            cons_to_prim(&[-1.0, 0.0, 0.0, 0.0, 2.5], &gm),
            Err(BadState::NonPositiveDensity)
        );
        // kinetic energy exceeds total energy
        assert_eq!(
            cons_to_prim(&[1.0, 3.0, 0.0, 0.0, 2.5], &gm),
            Err(BadState::NonPositiveInternalEnergy)
        );
        assert_eq!(
            cons_to_prim(&[1.0, f64::NAN, 0.0, 0.0, 2.5], &gm),
            Err(BadState::NonFinite)
        );
    }

    #[test]
    fn power_law_viscosity() {
        let gm = GasModel::new(
            1.4,
            0.7,
            ViscosityLaw::PowerLaw { mu_w: 2.0e-3, t_w: 0.5, exponent: 0.7 },
        )
        .unwrap();
        assert!((gm.mu(0.5) - 2.0e-3).abs() < 1e-18);
        let ratio: f64 = gm.mu(1.0) / 2.0e-3;
        assert!((ratio - 2.0f64.powf(0.7)).abs() < 1e-14);
    }
}
