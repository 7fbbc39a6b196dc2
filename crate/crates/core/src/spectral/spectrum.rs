use serde::Serialize;

use super::jacobi::{symmetric_eigenvalues, FloatMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::to_f64;
use crate::resistance::{profile, ResistanceProfile};

/// Default grouping tolerance for multiplicities.
pub const DEFAULT_GROUP_TOL: f64 = 1e-9;
/// Tolerance for the trace, energy and `Σρ² = S` invariants.
pub const INVARIANT_TOL: f64 = 1e-8;

/// A resistance spectrum: values descending, grouped by multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// `(representative, multiplicity)`, descending.
    pub groups: Vec<(f64, usize)>,
    /// `Σ |ρ_i|`
    pub energy: f64,
    /// `max |ρ_i|`
    pub radius: f64,
}

/// Merges consecutive descending values `a`, `b` while
/// `|a − b| < tol·max(1, |a|)`, `a` being the first value of the group.
pub fn group_values(sorted_desc: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut groups: Vec<(f64, f64, usize)> = Vec::new(); // (first, sum, count)
    for &v in sorted_desc {
        match groups.last_mut() {
            Some((first, sum, count)) if (*first - v).abs() < tol * first.abs().max(1.0) => {
                *sum += v;
                *count += 1;
            }
            _ => groups.push((v, v, 1)),
        }
    }
    groups.into_iter().map(|(_, sum, count)| (sum / count as f64, count)).collect()
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let groups = group_values(&values, tol);
        let energy = values.iter().map(|v| v.abs()).sum();
        let radius = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Self { values, groups, energy, radius }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn distinct(&self) -> usize {
        self.groups.len()
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn square_sum(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    pub fn positive_groups(&self) -> usize {
        self.groups.iter().filter(|(v, _)| *v > 0.0).count()
    }

    /// Largest entrywise gap between two spectra of equal order, values
    /// compared in sorted order (a multiset comparison).
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.order() == other.order()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Json<'a> {
            groups: Vec<(f64, usize)>,
            energy: f64,
            radius: f64,
            values: &'a [f64],
        }
        serde_json::to_value(Json {
            groups: self.groups.clone(),
            energy: self.energy,
            radius: self.radius,
            values: &self.values,
        })
        .expect("spectrum serialization cannot fail")
    }
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::SpectrumInvariant(what()))
    }
}

/// Resistance spectrum of a graph whose profile is already known; enforces
/// trace zero, `Σρ² = S(G)`, a single positive eigenvalue and `E_R = 2ρ_1`.
pub fn r_spectrum_from_profile(p: &ResistanceProfile, tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    let values = symmetric_eigenvalues(&FloatMatrix::from_rational(&p.r)?)?;
    let spec = Spectrum::from_values(values, tol);
    let s = to_f64(&p.s_sum);
    let scale = s.max(1.0);
    check(spec.trace().abs() <= INVARIANT_TOL * scale, || {
        format!("trace {:e} is not zero", spec.trace())
    })?;
    check((spec.square_sum() - s).abs() <= INVARIANT_TOL * scale, || {
        format!("sum of squares {} differs from S(G) = {s}", spec.square_sum())
    })?;
    check(spec.positive_groups() == 1, || {
        format!("{} positive eigenvalue groups", spec.positive_groups())
    })?;
    check((spec.energy - 2.0 * spec.radius).abs() <= INVARIANT_TOL * spec.energy.max(1.0), || {
        format!("energy {} is not twice the radius {}", spec.energy, spec.radius)
    })?;
    Ok(spec)
}

pub fn r_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    r_spectrum_from_profile(&profile(g)?, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn spectrum_of(spec: FamilySpec) -> Spectrum {
        r_spectrum(&generate(&spec).unwrap(), DEFAULT_GROUP_TOL).unwrap()
    }

    #[test]
    fn grouping() {
        let g = group_values(&[3.0, 1.0 + 1e-12, 1.0, 1.0 - 1e-12, -2.0], 1e-9);
        assert_eq!(g.len(), 3);
        assert_eq!(g[1].1, 3);
        assert!((g[1].0 - 1.0).abs() < 1e-15);
        assert_eq!(group_values(&[1.0, 0.999], 1e-9).len(), 2);
        assert!(group_values(&[], 1e-9).is_empty());
    }

    #[test]
    fn complete_five() {
        let s = spectrum_of(FamilySpec::Complete(5));
        assert_eq!(s.groups.len(), 2);
        assert!((s.groups[0].0 - 8.0 / 5.0).abs() < 1e-12 && s.groups[0].1 == 1);
        assert!((s.groups[1].0 + 2.0 / 5.0).abs() < 1e-12 && s.groups[1].1 == 4);
        assert!((s.energy - 16.0 / 5.0).abs() < 1e-12);
    }

    #[test]
    fn cycle_five_energy() {
        assert!((spectrum_of(FamilySpec::Cycle(5)).energy - 8.0).abs() < 1e-10);
    }

    #[test]
    fn k33_energy() {
        assert!((spectrum_of(FamilySpec::CompleteBipartite(3, 3)).energy - 6.0).abs() < 1e-10);
    }

    #[test]
    fn c4_spectrum() {
        let s = spectrum_of(FamilySpec::Cycle(4));
        let expected = [2.5, -0.5, -1.0, -1.0];
        for (a, b) in s.values.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(s.distinct(), 3);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let g = generate(&FamilySpec::Complete(3)).unwrap();
        assert!(r_spectrum(&g, 0.0).is_err());
        assert!(r_spectrum(&g, f64::NAN).is_err());
    }

    #[test]
    fn json_shape() {
        let v = spectrum_of(FamilySpec::Complete(3)).to_json();
        assert_eq!(v["groups"].as_array().unwrap().len(), 2);
        assert_eq!(v["groups"][1][1], 2);
        assert!(v["energy"].as_f64().unwrap() > 2.6);
    }
}
