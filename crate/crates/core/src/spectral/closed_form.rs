//! Resistance spectra of graph products predicted from the factor.

use super::spectrum::{r_spectrum_from_profile, Spectrum};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{int, ratio, to_f64, Rational};
use crate::resistance::{profile, ResistanceProfile};

#[derive(Clone, Debug)]
pub enum SpectrumForm {
    /// `D2G` of an `r`-regular, resistance-regular `G`.
    Double(Graph),
    /// `G[K2]` of an `r`-regular, resistance-regular `G`.
    LexicoK2(Graph),
    /// `K_n × K_2`.
    CompleteCartesianK2(usize),
}

/// Regularity `r` and profile of a factor that is regular and resistance regular.
fn regular_factor(g: &Graph) -> Result<(usize, ResistanceProfile)> {
    let r = g
        .regularity()
        .ok_or_else(|| Error::Precondition("factor graph is not regular".into()))?;
    let p = profile(g)?;
    if !p.label.is_resistance_regular() {
        return Err(Error::Precondition("factor graph is not resistance regular".into()));
    }
    Ok((r, p))
}

/// Exact `Spec_R(K_n × K_2)` as `(value, multiplicity)`, descending.
pub fn complete_cartesian_groups(n: usize) -> Result<Vec<(Rational, usize)>> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("K_n x K_2 needs n >= 2, got {n}")));
    }
    let m = n as i64;
    let mut groups = vec![
        (ratio(5 * m * m + 2 * m - 4, m * (m + 2)), 1),
        (ratio(-2, m + 2), n - 1),
        (ratio(-2, m), n - 1),
        (int(-1), 1),
    ];
    groups.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(groups)
}

/// Resistance-regularity constant of the product, exactly.
pub fn product_resistance_constant(kind: &SpectrumForm) -> Result<Rational> {
    match kind {
        SpectrumForm::Double(g) | SpectrumForm::LexicoK2(g) => {
            let (r, p) = regular_factor(g)?;
            let k = p.label.resistance_constant().expect("checked resistance regular");
            let shift = if matches!(kind, SpectrumForm::LexicoK2(_)) { 1 } else { 0 };
            Ok(k / int(2) + ratio(g.order() as i64, (r + shift) as i64))
        }
        SpectrumForm::CompleteCartesianK2(n) => Ok(complete_cartesian_groups(*n)?.remove(0).0),
    }
}

pub fn closed_form_spectrum(kind: &SpectrumForm, tol: f64) -> Result<Spectrum> {
    let values = match kind {
        SpectrumForm::Double(g) | SpectrumForm::LexicoK2(g) => {
            let (r, p) = regular_factor(g)?;
            let spec = r_spectrum_from_profile(&p, tol)?;
            let n = g.order() as f64;
            let d = (r + usize::from(matches!(kind, SpectrumForm::LexicoK2(_)))) as f64;
            let mut values: Vec<f64> = spec.values.iter().map(|v| v / 2.0).collect();
            values[0] += n / d;
            values.extend(std::iter::repeat_n(-1.0 / d, g.order()));
            values
        }
        SpectrumForm::CompleteCartesianK2(n) => complete_cartesian_groups(*n)?
            .iter()
            .flat_map(|(v, mult)| std::iter::repeat_n(to_f64(v), *mult))
            .collect(),
    };
    Ok(Spectrum::from_values(values, tol))
}
