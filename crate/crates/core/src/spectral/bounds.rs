//! Spectral bounds on the resistance matrix, each oriented as `lhs ≤ rhs`.

use std::fmt;

use serde::Serialize;

use super::spectrum::{r_spectrum_from_profile, Spectrum, DEFAULT_GROUP_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{int, to_f64, Rational};
use crate::resistance::{profile, ResistanceProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundId {
    /// `2Kf/n ≤ ρ1`
    KfLower,
    /// `√(ΣR_i²/n) ≤ ρ1`
    RowsumLower,
    /// `ρ1 ≤ max_i T_i/R_i`
    WeightedRowsumUpper,
    /// `α ≤ ρ1` with `α = √(ΣT_i²/ΣR_i²)`
    TiLower,
    /// `E_R ≤ α + √((n−1)(S − α²))`
    AlphaEnergyUpper,
    /// `ρ1 ≤ max_{i≠j} √(R̄_i R̄_j)`
    AvgDegUpper,
    /// `min_{i≠j} √(R̄_i R̄_j) ≤ ρ1`
    AvgDegLower,
    /// `2√(ΣR_i²/n) ≤ E_R`
    EnergyRowsumLower,
    /// `4Kf/n ≤ E_R`
    EnergyKfLower,
    /// `Kf ≤ √(n(n−1)Σρ_i²)/2`
    KfSpectralUpper,
}

impl BoundId {
    pub const ALL: [BoundId; 10] = [
        BoundId::KfLower,
        BoundId::RowsumLower,
        BoundId::WeightedRowsumUpper,
        BoundId::TiLower,
        BoundId::AlphaEnergyUpper,
        BoundId::AvgDegUpper,
        BoundId::AvgDegLower,
        BoundId::EnergyRowsumLower,
        BoundId::EnergyKfLower,
        BoundId::KfSpectralUpper,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::KfLower => "KF_LOWER",
            BoundId::RowsumLower => "ROWSUM_LOWER",
            BoundId::WeightedRowsumUpper => "WEIGHTED_ROWSUM_UPPER",
            BoundId::TiLower => "TI_LOWER",
            BoundId::AlphaEnergyUpper => "ALPHA_ENERGY_UPPER",
            BoundId::AvgDegUpper => "AVG_DEG_UPPER",
            BoundId::AvgDegLower => "AVG_DEG_LOWER",
            BoundId::EnergyRowsumLower => "ENERGY_ROWSUM_LOWER",
            BoundId::EnergyKfLower => "ENERGY_KF_LOWER",
            BoundId::KfSpectralUpper => "KF_SPECTRAL_UPPER",
        }
    }

    /// Graph property under which the bound is attained.
    pub fn condition_label(self) -> &'static str {
        match self {
            BoundId::KfLower
            | BoundId::RowsumLower
            | BoundId::WeightedRowsumUpper
            | BoundId::EnergyRowsumLower
            | BoundId::EnergyKfLower => "resistance regular",
            BoundId::TiLower | BoundId::AvgDegUpper | BoundId::AvgDegLower => "pseudo resistance regular",
            BoundId::AlphaEnergyUpper => "complete graph",
            BoundId::KfSpectralUpper => "all resistances equal",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEntry {
    pub id: BoundId,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub equality: bool,
    pub condition_label: &'static str,
    pub condition_holds: bool,
    /// `α + √((n−1)(S − α))`, the other reading of the α bound; reported only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alt_rhs: Option<f64>,
}

impl BoundEntry {
    /// Equality observed without the condition, or the reverse.
    pub fn condition_mismatch(&self) -> bool {
        self.equality != self.condition_holds
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub graph: String,
    #[serde(rename = "bounds")]
    pub entries: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn entry(&self, id: BoundId) -> &BoundEntry {
        self.entries.iter().find(|e| e.id == id).expect("every bound id is reported")
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.condition_mismatch())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("bounds serialization cannot fail")
    }
}

/// `(min, max)` of `√(R̄_i R̄_j)` over pairs `i ≠ j`.
pub fn avg_pair_extremes(p: &ResistanceProfile) -> (f64, f64) {
    let mut avg: Vec<&Rational> = p.avg.iter().collect();
    avg.sort();
    let n = avg.len();
    let lo = to_f64(&(avg[0] * avg[1])).sqrt();
    let hi = to_f64(&(avg[n - 1] * avg[n - 2])).sqrt();
    (lo, hi)
}

/// `α² = ΣT_i² / ΣR_i²`, exact.
pub fn alpha_squared(p: &ResistanceProfile) -> Rational {
    p.second_square_sum() / p.rdeg_square_sum()
}

fn within(lhs: f64, rhs: f64, tol: f64) -> (bool, bool) {
    let slack = tol * rhs.abs().max(1.0);
    (lhs <= rhs + slack, (lhs - rhs).abs() <= slack)
}

pub fn bounds_report_with(g: &Graph, p: &ResistanceProfile, spec: &Spectrum, tol: f64) -> Result<BoundsReport> {
    let n = p.order();
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let nf = n as f64;
    let rho1 = spec.radius;
    let energy = spec.energy;
    let kf = to_f64(&p.kf);
    let rdeg_sq = p.rdeg_square_sum();
    let s = to_f64(&p.s_sum);
    let rms = to_f64(&(&rdeg_sq / int(n as i64))).sqrt();
    let max_avg = p.avg.iter().max().map(to_f64).expect("n >= 2");
    let alpha_sq = alpha_squared(p);
    let alpha = to_f64(&alpha_sq).sqrt();
    let alpha_gap = to_f64(&(&p.s_sum - &alpha_sq)).max(0.0);
    let (pair_lo, pair_hi) = avg_pair_extremes(p);

    let rr = p.label.is_resistance_regular();
    let prr = p.label.is_pseudo_resistance_regular();

    let entries = BoundId::ALL
        .iter()
        .map(|&id| {
            let mut alt_rhs = None;
            let (lhs, rhs, condition_holds) = match id {
                BoundId::KfLower => (2.0 * kf / nf, rho1, rr),
                BoundId::RowsumLower => (rms, rho1, rr),
                BoundId::WeightedRowsumUpper => (rho1, max_avg, rr),
                BoundId::TiLower => (alpha, rho1, prr),
                BoundId::AlphaEnergyUpper => {
                    alt_rhs = Some(alpha + ((nf - 1.0) * (s - alpha)).max(0.0).sqrt());
                    (energy, alpha + ((nf - 1.0) * alpha_gap).sqrt(), g.is_complete())
                }
                BoundId::AvgDegUpper => (rho1, pair_hi, prr),
                BoundId::AvgDegLower => (pair_lo, rho1, prr),
                BoundId::EnergyRowsumLower => (2.0 * rms, energy, rr),
                BoundId::EnergyKfLower => (4.0 * kf / nf, energy, rr),
                BoundId::KfSpectralUpper => {
                    (kf, (nf * (nf - 1.0) * spec.square_sum()).sqrt() / 2.0, p.is_equidistant())
                }
            };
            let (holds, equality) = within(lhs, rhs, tol);
            BoundEntry {
                id,
                lhs,
                rhs,
                holds,
                equality,
                condition_label: id.condition_label(),
                condition_holds,
                alt_rhs,
            }
        })
        .collect();
    let graph = g.label().map(str::to_owned).unwrap_or_else(|| format!("graph(n={n}, m={})", g.size()));
    Ok(BoundsReport { graph, entries })
}

pub fn bounds_report(g: &Graph, tol: f64) -> Result<BoundsReport> {
    let p = profile(g)?;
    let spec = r_spectrum_from_profile(&p, DEFAULT_GROUP_TOL)?;
    bounds_report_with(g, &p, &spec, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_edge_list, FamilySpec};

    const TOL: f64 = 1e-8;

    fn report(spec: FamilySpec) -> BoundsReport {
        bounds_report(&generate(&spec).unwrap(), TOL).unwrap()
    }

    #[test]
    fn triangle_kf_lower_is_tight() {
        let e = report(FamilySpec::Complete(3)).entry(BoundId::KfLower).clone();
        assert!((e.lhs - 4.0 / 3.0).abs() < 1e-12);
        assert!((e.rhs - 4.0 / 3.0).abs() < 1e-12);
        assert!(e.holds && e.equality && e.condition_holds);
    }

    #[test]
    fn figure_three_rowsum_is_strict() {
        let g = parse_edge_list(
            "n 9\n6 1\n1 2\n2 3\n3 4\n4 1\n1 5\n5 6\n6 7\n7 8\n8 9\n9 3\n3 8\n8 2\n2 5\n6 4\n4 9\n9 7\n7 5\n",
        )
        .unwrap();
        let r = bounds_report(&g, TOL).unwrap();
        let e = r.entry(BoundId::RowsumLower);
        assert!(e.lhs < e.rhs - 1e-6);
        assert!(e.holds && !e.equality && !e.condition_holds);
        assert_eq!(r.violations().count(), 0);
    }

    #[test]
    fn k4_alpha_bound_is_tight() {
        let e = report(FamilySpec::Complete(4)).entry(BoundId::AlphaEnergyUpper).clone();
        assert!((e.lhs - 3.0).abs() < 1e-12);
        assert!((e.rhs - 3.0).abs() < 1e-12);
        assert!(e.equality && e.condition_holds);
        // α = 3/2, S = 3: the other reading gives 3/2 + √(3·3/2)
        assert!((e.alt_rhs.unwrap() - (1.5 + 4.5f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn all_bounds_hold_on_families() {
        for spec in [
            FamilySpec::Path(5),
            FamilySpec::Cycle(7),
            FamilySpec::CompleteBipartite(2, 5),
            FamilySpec::CocktailParty(4),
            FamilySpec::CompleteMultipartite(vec![1, 2, 3]),
        ] {
            let r = report(spec.clone());
            assert_eq!(r.entries.len(), 10);
            assert_eq!(r.violations().count(), 0, "{spec}");
            assert_eq!(r.mismatches().count(), 0, "{spec}");
        }
    }

    #[test]
    fn json_shape() {
        let v = report(FamilySpec::Complete(3)).to_json();
        assert_eq!(v["graph"], "K3");
        let bounds = v["bounds"].as_array().unwrap();
        assert_eq!(bounds.len(), 10);
        assert_eq!(bounds[0]["id"], "KF_LOWER");
        assert_eq!(bounds[9]["id"], "KF_SPECTRAL_UPPER");
        assert!(bounds[0].get("alt_rhs").is_none());
        assert!(bounds[4]["alt_rhs"].is_number());
    }
}
