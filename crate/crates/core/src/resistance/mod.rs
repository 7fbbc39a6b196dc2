//! Exact resistance distances and the quantities derived from them.
//!
//! For a connected graph, `r_ij = l†_ii + l†_jj − 2 l†_ij`. The row sums `R_i`
//! are the resistance degrees, `T_i = Σ_j r_ij R_j` the second resistance
//! degrees and `T_i / R_i` the average resistance degrees. A graph is
//! `k`-resistance regular when every `R_i = k`, and pseudo `k`-resistance
//! regular when every `T_i / R_i = k`. All comparisons here are exact.

mod closed_form;

use num_traits::Zero;
use serde::Serialize;

pub use closed_form::{closed_form_resistance, ClosedForm, ClosedFormValue};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{format_rational, laplacian_pinv, resistance_from_one_inverse, Rational, RationalMatrix};

/// Resistance distance matrix via the Laplacian pseudoinverse.
pub fn resistance_matrix(g: &Graph) -> Result<RationalMatrix> {
    let pinv = laplacian_pinv(g)?;
    Ok(resistance_from_one_inverse(&pinv))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassKind {
    ResistanceRegular(Rational),
    PseudoResistanceRegular(Rational),
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLabel {
    pub kind: ClassKind,
    /// Pseudo constant of a resistance-regular graph (equal to its `k`).
    pub pseudo_also: Option<Rational>,
}

impl ClassLabel {
    pub fn is_resistance_regular(&self) -> bool {
        matches!(self.kind, ClassKind::ResistanceRegular(_))
    }

    /// True for both resistance-regular and pseudo-resistance-regular graphs.
    pub fn is_pseudo_resistance_regular(&self) -> bool {
        !matches!(self.kind, ClassKind::Neither)
    }

    pub fn resistance_constant(&self) -> Option<&Rational> {
        match &self.kind {
            ClassKind::ResistanceRegular(k) => Some(k),
            _ => None,
        }
    }

    pub fn pseudo_constant(&self) -> Option<&Rational> {
        match &self.kind {
            ClassKind::ResistanceRegular(_) => self.pseudo_also.as_ref(),
            ClassKind::PseudoResistanceRegular(k) => Some(k),
            ClassKind::Neither => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ClassKind::ResistanceRegular(_) => "ResistanceRegular",
            ClassKind::PseudoResistanceRegular(_) => "PseudoResistanceRegular",
            ClassKind::Neither => "Neither",
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            ClassKind::ResistanceRegular(k) => write!(f, "{k}-resistance regular"),
            ClassKind::PseudoResistanceRegular(k) => write!(f, "pseudo {k}-resistance regular"),
            ClassKind::Neither => write!(f, "neither resistance regular nor pseudo resistance regular"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ResistanceProfile {
    pub r: RationalMatrix,
    /// `R_i`
    pub rdeg: Vec<Rational>,
    /// `T_i`
    pub second: Vec<Rational>,
    /// `T_i / R_i`
    pub avg: Vec<Rational>,
    /// Kirchhoff index, `Σ_{i<j} r_ij`.
    pub kf: Rational,
    /// `Σ_i Σ_j r_ij²`, equal to the sum of squared resistance eigenvalues.
    pub s_sum: Rational,
    pub label: ClassLabel,
}

fn all_equal(values: &[Rational]) -> Option<&Rational> {
    let first = values.first()?;
    values.iter().all(|v| v == first).then_some(first)
}

fn sum(values: impl IntoIterator<Item = Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |a, b| a + b)
}

pub fn classify_rows(rdeg: &[Rational], avg: &[Rational]) -> ClassLabel {
    if let Some(k) = all_equal(rdeg) {
        return ClassLabel {
            kind: ClassKind::ResistanceRegular(k.clone()),
            pseudo_also: all_equal(avg).cloned(),
        };
    }
    match all_equal(avg) {
        Some(k) => ClassLabel {
            kind: ClassKind::PseudoResistanceRegular(k.clone()),
            pseudo_also: None,
        },
        None => ClassLabel { kind: ClassKind::Neither, pseudo_also: None },
    }
}

impl ResistanceProfile {
    pub fn order(&self) -> usize {
        self.r.rows()
    }

    /// `Σ R_i²`
    pub fn rdeg_square_sum(&self) -> Rational {
        sum(self.rdeg.iter().map(|x| x * x))
    }

    /// `Σ T_i²`
    pub fn second_square_sum(&self) -> Rational {
        sum(self.second.iter().map(|x| x * x))
    }

    /// `Σ T_i`
    pub fn second_sum(&self) -> Rational {
        sum(self.second.iter().cloned())
    }

    /// True when all off-diagonal resistances coincide.
    pub fn is_equidistant(&self) -> bool {
        let n = self.order();
        let mut off = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
        match off.next() {
            None => true,
            Some(first) => {
                let v = &self.r[first];
                off.all(|p| self.r[p] == *v)
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Label {
            kind: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            k: Option<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            pseudo_also: Option<String>,
        }
        #[derive(Serialize)]
        struct Profile {
            n: usize,
            label: Label,
            row_sums: Vec<String>,
            kirchhoff: String,
            s_sum: String,
        }
        let k = match &self.label.kind {
            ClassKind::ResistanceRegular(k) | ClassKind::PseudoResistanceRegular(k) => Some(format_rational(k)),
            ClassKind::Neither => None,
        };
        let p = Profile {
            n: self.order(),
            label: Label {
                kind: self.label.kind_name(),
                k,
                pseudo_also: self.label.pseudo_also.as_ref().map(format_rational),
            },
            row_sums: self.rdeg.iter().map(format_rational).collect(),
            kirchhoff: format_rational(&self.kf),
            s_sum: format_rational(&self.s_sum),
        };
        serde_json::to_value(p).expect("profile serialization cannot fail")
    }
}

/// Builds the profile from an already computed resistance matrix.
pub fn profile_from_matrix(r: RationalMatrix) -> Result<ResistanceProfile> {
    let n = r.rows();
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let rdeg = r.row_sums();
    if let Some(i) = rdeg.iter().position(|x| *x <= Rational::zero()) {
        return Err(Error::Precondition(format!("resistance degree of vertex {i} is not positive")));
    }
    let second: Vec<Rational> = (0..n)
        .map(|i| sum(r.row(i).iter().zip(&rdeg).map(|(a, b)| a * b)))
        .collect();
    let avg: Vec<Rational> = second.iter().zip(&rdeg).map(|(t, r)| t / r).collect();
    let kf = sum(rdeg.iter().cloned()) / Rational::from_integer(2.into());
    let s_sum = sum(r.entries().iter().map(|x| x * x));
    let label = classify_rows(&rdeg, &avg);
    Ok(ResistanceProfile { r, rdeg, second, avg, kf, s_sum, label })
}

pub fn profile(g: &Graph) -> Result<ResistanceProfile> {
    if g.order() < 2 {
        return Err(Error::TooSmall(g.order()));
    }
    profile_from_matrix(resistance_matrix(g)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagWitness {
    pub min_index: usize,
    pub max_index: usize,
    pub min_value: Rational,
    pub max_value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagTest {
    pub equal: bool,
    pub witness: Option<DiagWitness>,
}

/// Resistance regularity decided from the diagonal of `L†` alone: the graph
/// is resistance regular iff all `l†_ii` coincide.
pub fn diag_pinv_test(g: &Graph) -> Result<DiagTest> {
    let diag = laplacian_pinv(g)?.diagonal();
    let (mut lo, mut hi) = (0, 0);
    for (i, d) in diag.iter().enumerate() {
        if *d < diag[lo] {
            lo = i;
        }
        if *d > diag[hi] {
            hi = i;
        }
    }
    if diag[lo] == diag[hi] {
        return Ok(DiagTest { equal: true, witness: None });
    }
    Ok(DiagTest {
        equal: false,
        witness: Some(DiagWitness {
            min_index: lo,
            max_index: hi,
            min_value: diag[lo].clone(),
            max_value: diag[hi].clone(),
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, parse_edge_list, FamilySpec};
    use crate::linalg::{int, ratio};

    fn family(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn complete_graph_matrix() {
        for n in 2..=6usize {
            let r = resistance_matrix(&family(FamilySpec::Complete(n))).unwrap();
            let expected = (&RationalMatrix::ones(n) - &RationalMatrix::identity(n)).scale(&ratio(2, n as i64));
            assert_eq!(r, expected);
        }
    }

    #[test]
    fn trees_match_path_lengths() {
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        for g in [family(FamilySpec::Path(5)), star] {
            let r = resistance_matrix(&g).unwrap();
            let d = g.distance_matrix();
            for i in 0..g.order() {
                for j in 0..g.order() {
                    assert_eq!(r[(i, j)], int(d[i][j] as i64));
                }
            }
        }
    }

    #[test]
    fn cycle_five_profile() {
        let p = profile(&family(FamilySpec::Cycle(5))).unwrap();
        assert!(p.rdeg.iter().all(|x| *x == int(4)));
        assert_eq!(p.kf, int(10));
        assert_eq!(p.label.kind, ClassKind::ResistanceRegular(int(4)));
        assert_eq!(p.label.pseudo_also, Some(int(4)));
    }

    #[test]
    fn path_is_neither() {
        let p = profile(&family(FamilySpec::Path(3))).unwrap();
        assert_eq!(p.rdeg, vec![int(3), int(2), int(3)]);
        // T = R·(3,2,3) = (2+6, 3+3, 6+2)
        assert_eq!(p.second, vec![int(8), int(6), int(8)]);
        assert_eq!(p.label.kind, ClassKind::Neither);
        assert_eq!(p.second_sum(), p.rdeg_square_sum());
    }

    #[test]
    fn single_vertex_rejected() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(profile(&g).unwrap_err(), Error::TooSmall(1));
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(profile(&g), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn classification_from_rows() {
        let label = classify_rows(&[int(2), int(3)], &[ratio(5, 2), ratio(5, 2)]);
        assert_eq!(label.kind, ClassKind::PseudoResistanceRegular(ratio(5, 2)));
        assert!(label.is_pseudo_resistance_regular() && !label.is_resistance_regular());
    }

    #[test]
    fn diag_test_examples() {
        assert!(diag_pinv_test(&family(FamilySpec::CompleteBipartite(3, 3))).unwrap().equal);
        let p3 = diag_pinv_test(&family(FamilySpec::Path(3))).unwrap();
        assert!(!p3.equal);
        let w = p3.witness.unwrap();
        assert_eq!((w.min_index, w.max_index), (1, 0));
        assert_eq!(w.min_value, ratio(2, 9));
        assert_eq!(w.max_value, ratio(5, 9));
        let l = laplacian_pinv(&family(FamilySpec::Path(3))).unwrap();
        assert_eq!(l[(0, 0)], l[(2, 2)]);
        let fig2 = parse_edge_list("n 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n1 4\n2 6\n3 5\n").unwrap();
        assert!(diag_pinv_test(&fig2).unwrap().equal);
    }

    #[test]
    fn json_schema() {
        let p = profile(&family(FamilySpec::Complete(3))).unwrap();
        let v = p.to_json();
        assert_eq!(v["n"], 3);
        assert_eq!(v["label"]["kind"], "ResistanceRegular");
        assert_eq!(v["label"]["k"], "4/3");
        assert_eq!(v["row_sums"][0], "4/3");
        assert_eq!(v["kirchhoff"], "2/1");
        assert_eq!(v["s_sum"], "8/3");
    }
}
