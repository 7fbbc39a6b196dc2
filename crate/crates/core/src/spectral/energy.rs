//! Resistance energy identities and the consistency checks every spectrum
//! must pass.

use num_traits::Zero;
use serde::Serialize;

use super::bounds::avg_pair_extremes;
use super::spectrum::{r_spectrum_from_profile, Spectrum, DEFAULT_GROUP_TOL, INVARIANT_TOL};
use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::{format_rational, int, to_f64, Rational};
use crate::resistance::{profile, ResistanceProfile};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnergyRecord {
    pub energy: f64,
    pub twice_radius: f64,
    /// `2k` for a `k`-resistance regular graph.
    pub twice_k: Option<f64>,
    #[serde(serialize_with = "as_fraction")]
    pub kirchhoff: Rational,
    /// `nk/2` for a `k`-resistance regular graph.
    #[serde(serialize_with = "as_fraction_opt")]
    pub nk_half: Option<Rational>,
    /// `2√(ΣR_i²/n)`
    pub rowsum_lower: f64,
    /// `4Kf/n`
    pub kf_lower: f64,
    /// `2 min_{i≠j} √(R̄_i R̄_j)` and `2 max_{i≠j} √(R̄_i R̄_j)`
    pub avg_lower: f64,
    pub avg_upper: f64,
    pub failures: Vec<String>,
}

fn as_fraction<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

fn as_fraction_opt<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&format_rational(v)),
        None => s.serialize_none(),
    }
}

impl EnergyRecord {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn energy_identities_with(p: &ResistanceProfile, spec: &Spectrum, tol: f64) -> EnergyRecord {
    let n = p.order();
    let nf = n as f64;
    let energy = spec.energy;
    let twice_radius = 2.0 * spec.radius;
    let k = p.label.resistance_constant();
    let twice_k = k.map(|k| 2.0 * to_f64(k));
    let nk_half = k.map(|k| k * int(n as i64) / int(2));
    let rowsum_lower = 2.0 * to_f64(&(p.rdeg_square_sum() / int(n as i64))).sqrt();
    let kf_lower = 4.0 * to_f64(&p.kf) / nf;
    let (lo, hi) = avg_pair_extremes(p);
    let (avg_lower, avg_upper) = (2.0 * lo, 2.0 * hi);

    let mut failures = Vec::new();
    if !close(energy, twice_radius, tol) {
        failures.push(format!("energy {energy} differs from twice the radius {twice_radius}"));
    }
    if let Some(tk) = twice_k {
        if !close(energy, tk, tol) {
            failures.push(format!("energy {energy} differs from 2k = {tk}"));
        }
    }
    if let Some(v) = &nk_half {
        if *v != p.kf {
            failures.push(format!("Kf {} differs from nk/2 = {}", format_rational(&p.kf), format_rational(v)));
        }
    }
    let slack = tol * energy.max(1.0);
    for (name, bound) in [("2 sqrt(sum R_i^2 / n)", rowsum_lower), ("4 Kf / n", kf_lower), ("2 min sqrt", avg_lower)] {
        if bound > energy + slack {
            failures.push(format!("lower bound {name} = {bound} exceeds energy {energy}"));
        }
    }
    if energy > avg_upper + slack {
        failures.push(format!("energy {energy} exceeds upper bound 2 max sqrt = {avg_upper}"));
    }
    EnergyRecord {
        energy,
        twice_radius,
        twice_k,
        kirchhoff: p.kf.clone(),
        nk_half,
        rowsum_lower,
        kf_lower,
        avg_lower,
        avg_upper,
        failures,
    }
}

pub fn energy_identities(g: &Graph) -> Result<EnergyRecord> {
    let p = profile(g)?;
    let spec = r_spectrum_from_profile(&p, DEFAULT_GROUP_TOL)?;
    Ok(energy_identities_with(&p, &spec, INVARIANT_TOL))
}

/// Identities tying the exact profile to its float spectrum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    /// `Σ T_i = Σ R_i²`, compared exactly.
    pub second_sum_matches: bool,
    /// `E_R − 2ρ_1`
    pub energy_gap: f64,
    /// `Σ ρ_i`
    pub trace: f64,
    /// `Σ ρ_i² − S(G)`
    pub square_gap: f64,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn identity_checks(p: &ResistanceProfile, spec: &Spectrum, tol: f64) -> IdentityCheck {
    let second_sum_matches = p.second_sum() == p.rdeg_square_sum();
    let energy_gap = spec.energy - 2.0 * spec.radius;
    let trace = spec.trace();
    let s = to_f64(&p.s_sum);
    let square_gap = spec.square_sum() - s;
    let scale = s.max(1.0);
    let mut failures = Vec::new();
    if !second_sum_matches {
        failures.push("sum of T_i differs from sum of R_i^2".to_owned());
    }
    if energy_gap.abs() > tol * spec.energy.max(1.0) {
        failures.push(format!("energy minus twice the radius is {energy_gap:e}"));
    }
    if trace.abs() > tol * scale {
        failures.push(format!("eigenvalue sum is {trace:e}"));
    }
    if square_gap.abs() > tol * scale {
        failures.push(format!("sum of squared eigenvalues misses S by {square_gap:e}"));
    }
    if p.s_sum.is_zero() {
        failures.push("S is zero".to_owned());
    }
    IdentityCheck { second_sum_matches, energy_gap, trace, square_gap, failures }
}
