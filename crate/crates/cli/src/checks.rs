use serde::Serialize;

use resreg_core::resistance::{diag_pinv_test, profile};
use resreg_core::spectral::{
    bounds_report_with, closed_form_spectrum, eigencondition_regularity_test, energy_identities_with,
    identity_checks, product_resistance_constant, q_polynomial_check, r_spectrum_from_profile, SpectrumForm,
    DEFAULT_GROUP_TOL,
};
use resreg_core::linalg::format_rational;
use resreg_core::{BoundsReport, Graph, ResistanceProfile, Spectrum};

use crate::args::Product;
use crate::input::Loaded;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckOutcome {
    fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        let status = if passed { CheckStatus::Pass } else { CheckStatus::Fail };
        Self { id: id.into(), status, detail: detail.into() }
    }

    fn skip(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { id: id.into(), status: CheckStatus::Skip, detail: detail.into() }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// Everything computed for one graph.
pub struct Evaluation {
    pub profile: ResistanceProfile,
    pub spectrum: Spectrum,
    pub bounds: BoundsReport,
    /// Identity, energy, bound, Q-polynomial and eigencondition checks.
    pub checks: Vec<CheckOutcome>,
}

pub fn evaluate(g: &Graph, tol: f64) -> Result<Evaluation, CliError> {
    let p = profile(g)?;
    let spec = r_spectrum_from_profile(&p, DEFAULT_GROUP_TOL)?;
    let bounds = bounds_report_with(g, &p, &spec, tol)?;
    let mut checks = Vec::new();

    let ident = identity_checks(&p, &spec, tol);
    checks.push(CheckOutcome::new("IDENTITIES", ident.passed(), ident.failures.join("; ")));
    let energy = energy_identities_with(&p, &spec, tol);
    checks.push(CheckOutcome::new("ENERGY", energy.passed(), energy.failures.join("; ")));
    for e in &bounds.entries {
        checks.push(CheckOutcome::new(e.id.as_str(), e.holds, format!("lhs {} rhs {}", e.lhs, e.rhs)));
    }

    if p.label.is_resistance_regular() {
        let q = q_polynomial_check(g, DEFAULT_GROUP_TOL)?;
        let limit = tol * p.order() as f64;
        checks.push(CheckOutcome::new(
            "Q_POLYNOMIAL",
            q.max_abs_deviation <= limit,
            format!("max |Q(R) - J| = {:e}", q.max_abs_deviation),
        ));
    } else {
        checks.push(CheckOutcome::skip("Q_POLYNOMIAL", "not resistance regular"));
    }

    let exact = diag_pinv_test(g)?.equal;
    let float = eigencondition_regularity_test(g, tol)?;
    checks.push(CheckOutcome::new(
        "EIGENCONDITION",
        exact == float.regular,
        format!("exact {exact}, eigenvector spread {:e}", float.spread),
    ));

    Ok(Evaluation { profile: p, spectrum: spec, bounds, checks })
}

/// One check listing bounds whose equality flag disagrees with their condition.
pub fn equality_check(bounds: &BoundsReport) -> CheckOutcome {
    let ids: Vec<&str> = bounds.mismatches().map(|e| e.id.as_str()).collect();
    CheckOutcome::new("EQUALITY_CONDITIONS", ids.is_empty(), ids.join(", "))
}

/// Closed-form spectrum and resistance constant of the product, if one was requested.
pub fn product_checks(loaded: &Loaded, eval: &Evaluation, tol: f64) -> Vec<CheckOutcome> {
    let Some(product) = loaded.product else {
        return Vec::new();
    };
    let form = match product {
        Product::Double => SpectrumForm::Double(loaded.factor.clone()),
        Product::LexicoK2 => SpectrumForm::LexicoK2(loaded.factor.clone()),
        Product::CartesianK2 if loaded.factor.is_complete() => {
            SpectrumForm::CompleteCartesianK2(loaded.factor.order())
        }
        Product::CartesianK2 => {
            let why = "closed form known only for complete factors";
            return vec![
                CheckOutcome::skip("CLOSED_FORM_SPECTRUM", why),
                CheckOutcome::skip("PRODUCT_CONSTANT", why),
            ];
        }
    };
    let predicted = match closed_form_spectrum(&form, DEFAULT_GROUP_TOL) {
        Ok(s) => s,
        Err(e) => {
            return vec![
                CheckOutcome::skip("CLOSED_FORM_SPECTRUM", e.to_string()),
                CheckOutcome::skip("PRODUCT_CONSTANT", e.to_string()),
            ]
        }
    };
    let mut out = Vec::new();
    match predicted.max_deviation(&eval.spectrum) {
        Some(dev) => out.push(CheckOutcome::new(
            "CLOSED_FORM_SPECTRUM",
            dev <= tol * eval.spectrum.radius.max(1.0),
            format!("max deviation {dev:e}"),
        )),
        None => out.push(CheckOutcome::new("CLOSED_FORM_SPECTRUM", false, "order mismatch")),
    }
    match product_resistance_constant(&form) {
        Ok(k) => {
            let actual = eval.profile.label.resistance_constant();
            out.push(CheckOutcome::new(
                "PRODUCT_CONSTANT",
                actual == Some(&k),
                format!(
                    "predicted {}, actual {}",
                    format_rational(&k),
                    actual.map_or_else(|| "not resistance regular".to_owned(), format_rational)
                ),
            ));
        }
        Err(e) => out.push(CheckOutcome::skip("PRODUCT_CONSTANT", e.to_string())),
    }
    out
}
