//! Named, reportable identity suites: the complete ledger of the models'
//! operator claims.
//!
//! Every check reduces a residual operator to canonical form; `passed` is
//! equivalent to an empty term map and a failing check carries the printed
//! residual as its witness.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::models::{
    self, build_ladder, build_observable, default_j_set, hamiltonian_with, radial_reduce,
    CurvatureReading, ModelError, ModelId, ObservableId, FROZEN_CURVATURE,
};
use crate::opalg::{OperatorExpr, Param3D, RadialOp};
use crate::scalar::{rat, Rational, Scalar};

/// Identity families checked by this module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityId {
    O4Jj,
    O4Rj,
    O4Rr,
    ConsJ,
    ConsR,
    CasimirDef,
    CasimirSq,
    Factorize,
    Intertwine,
    DiracReduce,
}

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::O4Jj => "O4_JJ",
            IdentityId::O4Rj => "O4_RJ",
            IdentityId::O4Rr => "O4_RR",
            IdentityId::ConsJ => "CONS_J",
            IdentityId::ConsR => "CONS_R",
            IdentityId::CasimirDef => "CASIMIR_DEF",
            IdentityId::CasimirSq => "CASIMIR_SQ",
            IdentityId::Factorize => "FACTORIZE",
            IdentityId::Intertwine => "INTERTWINE",
            IdentityId::DiracReduce => "DIRAC_REDUCE",
        }
    }

    /// Coarse grouping used by report serialization.
    pub fn suite(self) -> &'static str {
        match self {
            IdentityId::O4Jj | IdentityId::O4Rj | IdentityId::O4Rr => "o4",
            IdentityId::ConsJ | IdentityId::ConsR => "conservation",
            IdentityId::CasimirDef | IdentityId::CasimirSq => "casimir",
            IdentityId::Factorize | IdentityId::Intertwine => "susy",
            IdentityId::DiracReduce => "dirac",
        }
    }
}

impl core::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Index assignment for a check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexSel {
    /// Expand over all meaningful index tuples (skipping those made trivial
    /// by antisymmetry).
    All,
    Pair(usize, usize),
    Single(usize),
    None,
}

/// Outcome of one concrete identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: IdentityId,
    pub model: ModelId,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub residual_terms: usize,
    pub witness: Option<String>,
}

impl CheckReport {
    fn from_residual_3d(
        identity: IdentityId,
        model: ModelId,
        params: BTreeMap<String, String>,
        residual: &OperatorExpr,
    ) -> Self {
        let reduced = residual.reduced_residual();
        let passed = reduced.is_empty();
        CheckReport {
            identity,
            model,
            params,
            passed,
            residual_terms: reduced.term_count(),
            witness: if passed { None } else { Some(reduced.to_string()) },
        }
    }

    fn from_residual_radial(
        identity: IdentityId,
        model: ModelId,
        params: BTreeMap<String, String>,
        residual: &RadialOp,
    ) -> Self {
        let passed = residual.is_zero();
        CheckReport {
            identity,
            model,
            params,
            passed,
            residual_terms: residual.term_count(),
            witness: if passed { None } else { Some(residual.to_string()) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymcheckError {
    Inapplicable { identity: IdentityId, model: ModelId },
    BadIndices { identity: IdentityId },
    Model(ModelError),
}

impl core::fmt::Display for SymcheckError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SymcheckError::Inapplicable { identity, model } => {
                write!(f, "identity {identity} does not apply to model {model}")
            }
            SymcheckError::BadIndices { identity } => {
                write!(f, "invalid index assignment for identity {identity}")
            }
            SymcheckError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SymcheckError {}

impl From<ModelError> for SymcheckError {
    fn from(e: ModelError) -> Self {
        SymcheckError::Model(e)
    }
}

/// Cached observables for one model under one curvature reading.
struct ModelOps {
    h: OperatorExpr,
    /// Conserved rotation generators: `L` for Ha, `J` for the spin models.
    g: Vec<OperatorExpr>,
    /// Runge-Lenz components: `R` for Ha, `Rhat` for the spin models.
    rl: Vec<OperatorExpr>,
}

fn model_ops(model: ModelId, reading: CurvatureReading) -> ModelOps {
    let gen_id = |a| {
        if model.has_spin() {
            ObservableId::J(a)
        } else {
            ObservableId::L(a)
        }
    };
    let rl_id = |a| {
        if model.has_spin() {
            ObservableId::Rhat(a)
        } else {
            ObservableId::R(a)
        }
    };
    ModelOps {
        h: hamiltonian_with(model, reading),
        g: (1..=3)
            .map(|a| build_observable(model, gen_id(a)).expect("generators exist"))
            .collect(),
        rl: (1..=3)
            .map(|a| build_observable(model, rl_id(a)).expect("runge-lenz exists"))
            .collect(),
    }
}

fn eps_sum(coeffs: &[OperatorExpr], a: usize, b: usize) -> OperatorExpr {
    let mut acc = OperatorExpr::zero();
    for c in 1..=3 {
        let e = models::eps(a, b, c);
        if e != 0 {
            acc = &acc + &coeffs[c - 1].scale(&Scalar::from_int(e));
        }
    }
    acc
}

impl ModelOps {
    /// `[G_a, G_b] - i eps_abc G_c`.
    fn o4_gg(&self, a: usize, b: usize) -> OperatorExpr {
        let comm = self.g[a - 1].commutator(&self.g[b - 1]);
        &comm - &eps_sum(&self.g, a, b).scale(&Scalar::i())
    }

    /// `[R_a, G_b] - i eps_abc R_c`.
    fn o4_rg(&self, a: usize, b: usize) -> OperatorExpr {
        let comm = self.rl[a - 1].commutator(&self.g[b - 1]);
        &comm - &eps_sum(&self.rl, a, b).scale(&Scalar::i())
    }

    /// `[R_a, R_b] + (2i/m) eps_abc G_c H`.
    fn o4_rr(&self, a: usize, b: usize) -> OperatorExpr {
        let comm = self.rl[a - 1].commutator(&self.rl[b - 1]);
        let gh: Vec<OperatorExpr> = self.g.iter().map(|g| g * &self.h).collect();
        let two_i = Scalar::new(rat(0), rat(2));
        let rhs = (&OperatorExpr::param(Param3D::Mass, -1) * &eps_sum(&gh, a, b)).scale(&two_i);
        &comm + &rhs
    }

    /// `[H, G_a]`.
    fn cons_g(&self, a: usize) -> OperatorExpr {
        self.h.commutator(&self.g[a - 1])
    }

    /// `[H, R_a]`.
    fn cons_r(&self, a: usize) -> OperatorExpr {
        self.h.commutator(&self.rl[a - 1])
    }
}

/// Residual of one o(4)/conservation identity at concrete indices, under the
/// frozen curvature reading. Exposed for antisymmetry and mutation tests.
pub fn identity_residual(
    id: IdentityId,
    model: ModelId,
    a: usize,
    b: usize,
) -> Result<OperatorExpr, SymcheckError> {
    let ops = model_ops(model, FROZEN_CURVATURE);
    match id {
        IdentityId::O4Jj => Ok(ops.o4_gg(a, b)),
        IdentityId::O4Rj => Ok(ops.o4_rg(a, b)),
        IdentityId::O4Rr => Ok(ops.o4_rr(a, b)),
        IdentityId::ConsJ => Ok(ops.cons_g(a)),
        IdentityId::ConsR => Ok(ops.cons_r(a)),
        _ => Err(SymcheckError::BadIndices { identity: id }),
    }
}

fn index_tuples(id: IdentityId, sel: IndexSel) -> Result<Vec<(usize, Option<usize>)>, SymcheckError> {
    let valid = |a: usize| (1..=3).contains(&a);
    match (id, sel) {
        (IdentityId::O4Jj | IdentityId::O4Rr, IndexSel::All) => {
            let mut v = Vec::new();
            for a in 1..=3 {
                for b in 1..=3 {
                    if a != b {
                        v.push((a, Some(b)));
                    }
                }
            }
            Ok(v)
        }
        (IdentityId::O4Rj, IndexSel::All) => {
            let mut v = Vec::new();
            for a in 1..=3 {
                for b in 1..=3 {
                    v.push((a, Some(b)));
                }
            }
            Ok(v)
        }
        (IdentityId::O4Jj | IdentityId::O4Rj | IdentityId::O4Rr, IndexSel::Pair(a, b))
            if valid(a) && valid(b) =>
        {
            Ok(alloc::vec![(a, Some(b))])
        }
        (IdentityId::ConsJ | IdentityId::ConsR, IndexSel::All) => {
            Ok((1..=3).map(|a| (a, None)).collect())
        }
        (IdentityId::ConsJ | IdentityId::ConsR, IndexSel::Single(a)) if valid(a) => {
            Ok(alloc::vec![(a, None)])
        }
        (IdentityId::CasimirDef | IdentityId::CasimirSq | IdentityId::DiracReduce, IndexSel::None) => {
            Ok(alloc::vec![(0, None)])
        }
        _ => Err(SymcheckError::BadIndices { identity: id }),
    }
}

fn reading_params(model: ModelId, reading: CurvatureReading) -> BTreeMap<String, String> {
    let mut params = BTreeMap::new();
    if model == ModelId::SpinOrbit {
        params.insert(
            String::from("curvature_reading"),
            String::from(reading.label()),
        );
    }
    params
}

fn o4_cons_reports(
    id: IdentityId,
    model: ModelId,
    tuples: &[(usize, Option<usize>)],
    reading: CurvatureReading,
) -> Vec<CheckReport> {
    let ops = model_ops(model, reading);
    tuples
        .iter()
        .map(|&(a, b)| {
            let residual = match (id, b) {
                (IdentityId::O4Jj, Some(b)) => ops.o4_gg(a, b),
                (IdentityId::O4Rj, Some(b)) => ops.o4_rg(a, b),
                (IdentityId::O4Rr, Some(b)) => ops.o4_rr(a, b),
                (IdentityId::ConsJ, None) => ops.cons_g(a),
                (IdentityId::ConsR, None) => ops.cons_r(a),
                _ => unreachable!("tuples validated"),
            };
            let mut params = reading_params(model, reading);
            params.insert(String::from("a"), a.to_string());
            if let Some(b) = b {
                params.insert(String::from("b"), b.to_string());
            }
            CheckReport::from_residual_3d(id, model, params, &residual)
        })
        .collect()
}

/// Whether an identity's residual involves the Hamiltonian, and hence the
/// spin-orbit curvature reading.
fn involves_h(id: IdentityId) -> bool {
    matches!(
        id,
        IdentityId::O4Rr | IdentityId::ConsJ | IdentityId::ConsR
    )
}

/// `C - (1/alpha) {J.Rhat}` for the spin-orbit model. `symmetrized` selects
/// `(J.Rhat + Rhat.J)/2` versus the plain left-to-right dot product.
pub fn casimir_def_residual(symmetrized: bool) -> OperatorExpr {
    let ops = model_ops(ModelId::SpinOrbit, FROZEN_CURVATURE);
    let c = build_observable(ModelId::SpinOrbit, ObservableId::C).expect("casimir exists");
    let mut dot = OperatorExpr::zero();
    for a in 0..3 {
        let jr = &ops.g[a] * &ops.rl[a];
        if symmetrized {
            let rj = &ops.rl[a] * &ops.g[a];
            dot = &dot + &(&jr + &rj).scale(&Scalar::from_ratio(1, 2));
        } else {
            dot = &dot + &jr;
        }
    }
    &c - &(&OperatorExpr::param(Param3D::Alpha, -1) * &dot)
}

fn casimir_reports(id: IdentityId) -> Vec<CheckReport> {
    match id {
        IdentityId::CasimirDef => {
            let residual = casimir_def_residual(true);
            let mut params = BTreeMap::new();
            params.insert(String::from("ordering"), String::from("symmetrized"));
            if casimir_def_residual(false).is_zero() {
                params.insert(
                    String::from("note"),
                    String::from("unsymmetrized ordering also gives zero residual"),
                );
            }
            alloc::vec![CheckReport::from_residual_3d(
                id,
                ModelId::SpinOrbit,
                params,
                &residual,
            )]
        }
        IdentityId::CasimirSq => {
            let c = build_observable(ModelId::SpinOrbit, ObservableId::C).expect("casimir exists");
            let residual = &(&c * &c) - &OperatorExpr::scalar(Scalar::from_ratio(1, 4));
            alloc::vec![CheckReport::from_residual_3d(
                id,
                ModelId::SpinOrbit,
                BTreeMap::new(),
                &residual,
            )]
        }
        _ => unreachable!(),
    }
}

fn applicable(id: IdentityId, model: ModelId) -> bool {
    match id {
        IdentityId::CasimirDef | IdentityId::CasimirSq => model == ModelId::SpinOrbit,
        IdentityId::DiracReduce => model == ModelId::Dipole,
        _ => true,
    }
}

/// Run one identity family for a model at the requested indices.
///
/// For the spin-orbit model, identities that involve the Hamiltonian are run
/// first with the curvature term exactly as printed; if any residual is
/// nonzero they are re-run with the mass-scaled reading and the reports say
/// which reading closes the algebra.
pub fn check_identity(
    id: IdentityId,
    model: ModelId,
    sel: IndexSel,
) -> Result<Vec<CheckReport>, SymcheckError> {
    if !applicable(id, model) {
        return Err(SymcheckError::Inapplicable {
            identity: id,
            model,
        });
    }
    match id {
        IdentityId::CasimirDef | IdentityId::CasimirSq => {
            index_tuples(id, sel)?;
            Ok(casimir_reports(id))
        }
        IdentityId::DiracReduce => {
            index_tuples(id, sel)?;
            Ok(alloc::vec![crate::dirac::verify_reduction()])
        }
        IdentityId::Factorize | IdentityId::Intertwine => {
            Err(SymcheckError::BadIndices { identity: id })
        }
        _ => {
            let tuples = index_tuples(id, sel)?;
            if model == ModelId::SpinOrbit && involves_h(id) {
                let verbatim = o4_cons_reports(id, model, &tuples, CurvatureReading::Verbatim);
                if verbatim.iter().all(|r| r.passed) {
                    return Ok(verbatim);
                }
                let mut rescued =
                    o4_cons_reports(id, model, &tuples, CurvatureReading::MassScaled);
                for r in &mut rescued {
                    r.params.insert(
                        String::from("note"),
                        String::from("verbatim 1/(8x^2) reading leaves a nonzero residual"),
                    );
                }
                return Ok(rescued);
            }
            Ok(o4_cons_reports(id, model, &tuples, FROZEN_CURVATURE))
        }
    }
}

/// Decide which curvature reading closes the spin-orbit conservation and
/// o(4) identities. Returns `None` when neither reading closes them all.
pub fn determine_spin_orbit_reading() -> Option<CurvatureReading> {
    for reading in [CurvatureReading::Verbatim, CurvatureReading::MassScaled] {
        let ops = model_ops(ModelId::SpinOrbit, reading);
        let mut all = true;
        for a in 1..=3 {
            all &= ops.cons_g(a).is_zero();
            all &= ops.cons_r(a).is_zero();
        }
        'outer: for a in 1..=3 {
            for b in 1..=3 {
                if a != b && !ops.o4_rr(a, b).is_zero() {
                    all = false;
                    break 'outer;
                }
            }
        }
        if all {
            return Some(reading);
        }
    }
    None
}

/// Shape-invariance checks: `FACTORIZE` is
/// `radial_reduce(model, j) - (a_j^+ a_j + c_j)` and `INTERTWINE` is
/// `H_j a_j^+ - a_j^+ H_{j+1}`, both exactly zero for every covered `j`.
pub fn check_susy(model: ModelId, j_set: &[Rational]) -> Result<Vec<CheckReport>, SymcheckError> {
    let mut reports = Vec::new();
    for j in j_set {
        let ladder = build_ladder(model, j)?;
        let h_j = radial_reduce(model, j)?;
        let refactored =
            &(&ladder.a_plus * &ladder.a) + &RadialOp::from_rational(ladder.c.clone());
        let fact = &h_j - &refactored;
        let mut params = BTreeMap::new();
        params.insert(String::from("j"), j.to_string());
        params.insert(String::from("c"), ladder.c.to_string());
        reports.push(CheckReport::from_residual_radial(
            IdentityId::Factorize,
            model,
            params,
            &fact,
        ));

        let h_next = radial_reduce(model, &(j + rat(1)))?;
        let inter = &(&h_j * &ladder.a_plus) - &(&ladder.a_plus * &h_next);
        let mut params = BTreeMap::new();
        params.insert(String::from("j"), j.to_string());
        reports.push(CheckReport::from_residual_radial(
            IdentityId::Intertwine,
            model,
            params,
            &inter,
        ));
    }
    Ok(reports)
}

/// The full ledger for one model: o(4) closure, conservation, Casimir
/// relations where defined, shape invariance over the default (or given)
/// quantum numbers, and the Dirac reduction for the dipole model.
pub fn run_suite(
    model: ModelId,
    j_set: Option<&[Rational]>,
) -> Result<Vec<CheckReport>, SymcheckError> {
    let mut reports = Vec::new();
    for id in [
        IdentityId::O4Jj,
        IdentityId::O4Rj,
        IdentityId::O4Rr,
        IdentityId::ConsJ,
        IdentityId::ConsR,
    ] {
        reports.extend(check_identity(id, model, IndexSel::All)?);
    }
    if model == ModelId::SpinOrbit {
        reports.extend(check_identity(IdentityId::CasimirDef, model, IndexSel::None)?);
        reports.extend(check_identity(IdentityId::CasimirSq, model, IndexSel::None)?);
    }
    if model == ModelId::Dipole {
        reports.extend(check_identity(IdentityId::DiracReduce, model, IndexSel::None)?);
    }
    let default = default_j_set(model);
    let j_set = j_set.unwrap_or(&default);
    reports.extend(check_susy(model, j_set)?);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn ha_o4_closure_with_symbolic_parameters() {
        for id in [IdentityId::O4Jj, IdentityId::O4Rj, IdentityId::O4Rr] {
            let reports = check_identity(id, ModelId::Ha, IndexSel::All).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(r.passed, "{} {:?} failed: {:?}", r.identity, r.params, r.witness);
                assert_eq!(r.residual_terms, 0);
            }
        }
    }

    #[test]
    fn dipole_o4_closure() {
        let reports = check_identity(IdentityId::O4Rr, ModelId::Dipole, IndexSel::Pair(1, 2)).unwrap();
        assert!(reports[0].passed, "witness: {:?}", reports[0].witness);
    }

    #[test]
    fn conservation_everywhere() {
        for model in ModelId::ALL {
            for id in [IdentityId::ConsJ, IdentityId::ConsR] {
                for r in check_identity(id, model, IndexSel::All).unwrap() {
                    assert!(r.passed, "{model} {}: {:?}", r.identity, r.witness);
                }
            }
        }
    }

    #[test]
    fn frozen_reading_matches_determination() {
        assert_eq!(determine_spin_orbit_reading(), Some(FROZEN_CURVATURE));
    }

    #[test]
    fn casimir_identities() {
        let def = check_identity(IdentityId::CasimirDef, ModelId::SpinOrbit, IndexSel::None).unwrap();
        assert!(def[0].passed, "witness: {:?}", def[0].witness);
        let sq = check_identity(IdentityId::CasimirSq, ModelId::SpinOrbit, IndexSel::None).unwrap();
        assert!(sq[0].passed);
    }

    #[test]
    fn antisymmetry_mirror() {
        for id in [IdentityId::O4Jj, IdentityId::O4Rr] {
            let ab = identity_residual(id, ModelId::Dipole, 1, 2).unwrap();
            let ba = identity_residual(id, ModelId::Dipole, 2, 1).unwrap();
            assert_eq!(ab, -&ba);
        }
    }

    #[test]
    fn susy_suite_default_sets() {
        for model in ModelId::ALL {
            let js = default_j_set(model);
            for r in check_susy(model, &js).unwrap() {
                assert!(r.passed, "{model} {} j={:?}: {:?}", r.identity, r.params, r.witness);
            }
        }
    }

    #[test]
    fn mutation_breaks_factorization() {
        // Flip the sign of the sigma1 part of the dipole superpotential.
        let j = ratio(1, 2);
        let w = crate::models::build_superpotential(ModelId::Dipole, &j).unwrap();
        let flip = RadialOp::sigma(1).scale_rational(&(ratio(1, 2) / (&j + rat(1))));
        let w_bad = &w - &flip.scale(&Scalar::from_int(2));
        let a = &RadialOp::d_r() + &w_bad;
        let a_plus = &(-&RadialOp::d_r()) + &w_bad;
        let c = ratio(-1, 9);
        let h = radial_reduce(ModelId::Dipole, &j).unwrap();
        let residual = &h - &(&(&a_plus * &a) + &RadialOp::from_rational(c));
        assert!(!residual.is_zero());
    }

    #[test]
    fn mutation_breaks_conservation() {
        // Adding r^-1 to the dipole Hamiltonian must break [H, Rhat_a].
        let h = build_observable(ModelId::Dipole, ObservableId::H).unwrap();
        let h_bad = &h + &OperatorExpr::r_pow(-1);
        let r1 = build_observable(ModelId::Dipole, ObservableId::Rhat(1)).unwrap();
        assert!(h.commutator(&r1).is_zero());
        assert!(!h_bad.commutator(&r1).is_zero());
    }

    #[test]
    fn inapplicable_pairs_error() {
        assert!(check_identity(IdentityId::CasimirSq, ModelId::Ha, IndexSel::None).is_err());
        assert!(check_identity(IdentityId::DiracReduce, ModelId::SpinOrbit, IndexSel::None).is_err());
        assert!(check_identity(IdentityId::O4Jj, ModelId::Ha, IndexSel::Pair(0, 2)).is_err());
    }

    #[test]
    fn full_suites_pass() {
        for model in ModelId::ALL {
            let reports = run_suite(model, None).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(
                    r.passed,
                    "{model} {} {:?}: {:?}",
                    r.identity, r.params, r.witness
                );
            }
        }
    }
}
