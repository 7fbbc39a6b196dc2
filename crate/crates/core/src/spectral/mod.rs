//! Resistance spectra, spectral bounds and closed-form spectral identities.
//!
//! Everything here runs in `f64` on the nearest-double image of the exact
//! resistance matrix; exact quantities come from [`crate::resistance`].

mod bounds;
mod closed_form;
mod eigencondition;
mod energy;
mod jacobi;
mod polynomial;
mod spectrum;

pub use bounds::{alpha_squared, avg_pair_extremes, bounds_report, bounds_report_with, BoundEntry, BoundId, BoundsReport};
pub use closed_form::{closed_form_spectrum, complete_cartesian_groups, product_resistance_constant, SpectrumForm};
pub use eigencondition::{eigencondition_regularity_test, laplacian_eigen, EigenCondition, LaplacianEigen};
pub use energy::{energy_identities, energy_identities_with, identity_checks, EnergyRecord, IdentityCheck};
pub use jacobi::{
    symmetric_eigen, symmetric_eigenvalues, FloatMatrix, SymmetricEigen, CONVERGENCE_TOL, MAX_SWEEPS, SYMMETRY_TOL,
};
pub use polynomial::{q_polynomial_check, QPolynomialCheck};
pub use spectrum::{group_values, r_spectrum, r_spectrum_from_profile, Spectrum, DEFAULT_GROUP_TOL, INVARIANT_TOL};
