//! Relations of the algebra generated by `X, Y, Z`, checked as exact
//! identities between normal-form q-difference operators.
//!
//! Right-hand sides are assembled from coefficient structs so that a single
//! coefficient can be corrupted on purpose; the mutation tests rely on this
//! to show the checker rejects wrong identities.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::{QParams, Rational};
use crate::qdiff::{make_operators, OperatorTriple, QDiffOperator};
use crate::report::{Check, Outcome};

/// An identity `lhs = rhs` between operators.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub anchor: String,
    pub lhs: QDiffOperator,
    pub rhs: QDiffOperator,
}

impl Relation {
    pub fn new(name: &str, anchor: &str, lhs: QDiffOperator, rhs: QDiffOperator) -> Self {
        Relation {
            name: name.to_string(),
            anchor: anchor.to_string(),
            lhs,
            rhs,
        }
    }

    pub fn outcome(&self) -> Outcome {
        match self.lhs.first_difference(&self.rhs) {
            None => Ok(()),
            Some(w) => Err(w.to_string()),
        }
    }

    pub fn check(&self, params: &QParams) -> Check {
        Check::from_result(self.name.clone(), self.anchor.clone(), Ok(self.outcome()))
            .with_params(params)
    }
}

fn lin(q: &Rational, terms: &[(&Rational, &QDiffOperator)], constant: &Rational) -> QDiffOperator {
    terms.iter().fold(
        QDiffOperator::scalar(q, constant.clone()),
        |acc, (c, op)| &acc + &op.scale(c),
    )
}

/// Scalars on the right-hand sides of the three raw relations
///
/// ```text
/// qXY - YX = xy_x X + xy_y Y
/// qYZ - ZY = yz_x X + yz_y Y + yz_z Z + yz_const
/// qZX - XZ = zx_x X + zx_z Z
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCoefficients {
    pub xy_x: Rational,
    pub xy_y: Rational,
    pub yz_x: Rational,
    pub yz_y: Rational,
    pub yz_z: Rational,
    pub yz_const: Rational,
    pub zx_x: Rational,
    pub zx_z: Rational,
}

impl RawCoefficients {
    pub fn new(params: &QParams) -> Self {
        let (q, a, b) = (params.q(), params.a(), params.b());
        let one = Rational::one();
        let qm1 = q - &one;
        let (ai, bi) = (a.inv(), b.inv());
        RawCoefficients {
            xy_x: q * &qm1 * &ai,
            xy_y: q * &qm1,
            yz_x: -(&qm1 * &bi * q.inv() * (&one + q)),
            yz_y: -(&qm1 * b),
            yz_z: &qm1 * &ai * q,
            yz_const: &qm1 * &ai * &bi * (&one - b) * (a - b * q),
            zx_x: -(&qm1 * b),
            zx_z: &qm1 * q,
        }
    }
}

pub fn raw_relations(params: &QParams, c: &RawCoefficients) -> Vec<Relation> {
    let q = params.q();
    let OperatorTriple { x, y, z } = make_operators(params);
    let zero = Rational::zero();
    vec![
        Relation::new(
            "raw_relation_xy",
            "com rel XY",
            x.q_commutator(&y, q),
            lin(q, &[(&c.xy_x, &x), (&c.xy_y, &y)], &zero),
        ),
        Relation::new(
            "raw_relation_yz",
            "com rel YZ",
            y.q_commutator(&z, q),
            lin(
                q,
                &[(&c.yz_x, &x), (&c.yz_y, &y), (&c.yz_z, &z)],
                &c.yz_const,
            ),
        ),
        Relation::new(
            "raw_relation_zx",
            "com rel ZX",
            z.q_commutator(&x, q),
            lin(q, &[(&c.zx_x, &x), (&c.zx_z, &z)], &zero),
        ),
    ]
}

pub fn verify_raw_relations(params: &QParams) -> Vec<Check> {
    raw_relations(params, &RawCoefficients::new(params))
        .iter()
        .map(|r| r.check(params))
        .collect()
}

/// `alpha_1 = a^-2 b q^-1 (q-1)^2 (q+1)`, `alpha_2 = a^-2 q^-1 (q-1)(ab + aq + bq)`.
pub fn structure_constants(params: &QParams) -> (Rational, Rational) {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let one = Rational::one();
    let qm1 = q - &one;
    let pre = a.pow(-2) * q.inv();
    let alpha1 = &pre * b * &qm1 * &qm1 * (q + &one);
    let alpha2 = &pre * &qm1 * (a * b + a * q + b * q);
    (alpha1, alpha2)
}

/// The standardized generators
///
/// ```text
/// X' = a / (b q (q-1)) X - a / (b (q-1))
/// Y' = b q^-1 Y - a^-1 b
/// Z' = -a^-1 Z - a^-1 b
/// ```
pub fn affine_generators(params: &QParams) -> Result<OperatorTriple> {
    let (q, a, b) = (params.q(), params.a(), params.b());
    let qm1 = q - Rational::one();
    if qm1.is_zero() {
        return Err(Error::Singular("q = 1 in the affine map".into()));
    }
    let ops = make_operators(params);
    let ab = a / b;
    let scalar = |c: Rational| QDiffOperator::scalar(q, c);
    Ok(OperatorTriple {
        x: &ops.x.scale(&(&ab / (q * &qm1))) + &scalar(-(&ab / &qm1)),
        y: &ops.y.scale(&(b / q)) + &scalar(-(b / a)),
        z: &ops.z.scale(&(-a.inv())) + &scalar(-(b / a)),
    })
}

/// `qX'Y' - Y'X' = 1`, `qY'Z' - Z'Y' = alpha_1 X' + alpha_2`, `qZ'X' - X'Z' = 1`,
/// plus the induced structure constants of the three-term Askey-Wilson
/// presentation (`beta_1 = delta_1 = 0`, `beta_2 = delta_2 = 1`).
pub fn standardized_relations(
    gens: &OperatorTriple,
    alpha1: &Rational,
    alpha2: &Rational,
) -> Vec<Relation> {
    let q = gens.x.q();
    let id = QDiffOperator::identity(q);
    vec![
        Relation::new(
            "standard_relation_1",
            "rel Pastro 1",
            gens.x.q_commutator(&gens.y, q),
            id.clone(),
        ),
        Relation::new(
            "standard_relation_2",
            "rel Pastro 2",
            gens.y.q_commutator(&gens.z, q),
            lin(q, &[(alpha1, &gens.x)], alpha2),
        ),
        Relation::new(
            "standard_relation_3",
            "rel Pastro 3",
            gens.z.q_commutator(&gens.x, q),
            id,
        ),
    ]
}

pub fn verify_standardized_relations(params: &QParams) -> Vec<Check> {
    let gens = match affine_generators(params) {
        Ok(g) => g,
        Err(e) => {
            return vec![Check::from_result(
                "affine_generators",
                "com rel XY-ZX",
                Err(e),
            )]
        }
    };
    let q = params.q();
    let (alpha1, alpha2) = structure_constants(params);
    let (beta1, beta2, delta1, delta2) = (
        Rational::zero(),
        Rational::one(),
        Rational::zero(),
        Rational::one(),
    );
    let mut checks: Vec<Check> = standardized_relations(&gens, &alpha1, &alpha2)
        .iter()
        .map(|r| r.check(params))
        .collect();
    let aw = [
        Relation::new(
            "",
            "",
            gens.x.q_commutator(&gens.y, q),
            lin(q, &[(&beta1, &gens.z)], &beta2),
        ),
        Relation::new(
            "",
            "",
            gens.y.q_commutator(&gens.z, q),
            lin(q, &[(&alpha1, &gens.x)], &alpha2),
        ),
        Relation::new(
            "",
            "",
            gens.z.q_commutator(&gens.x, q),
            lin(q, &[(&delta1, &gens.y)], &delta2),
        ),
    ];
    let aw_outcome = aw.iter().try_for_each(Relation::outcome);
    checks.push(
        Check::from_result("aw_z3_presentation", "rel AW 1-3", Ok(aw_outcome))
            .with_params(params)
            .with_param("alpha1", &alpha1)
            .with_param("alpha2", &alpha2)
            .with_param("beta1", beta1)
            .with_param("beta2", beta2)
            .with_param("delta1", delta1)
            .with_param("delta2", delta2),
    );
    checks
}

/// Coefficients of
/// `Q = xyz X'Y'Z' + xx X'^2 + x X' + y Y' + z Z'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirCoefficients {
    pub xyz: Rational,
    pub xx: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl CasimirCoefficients {
    /// `Q = (q^-2 - 1) X'Y'Z' + q^-1 alpha_1 X'^2 + q^-1 (q^-1 + 1)(alpha_2 X' + q^-1 Y' + Z')`.
    pub fn new(params: &QParams) -> Self {
        let q = params.q();
        let qi = q.inv();
        let (alpha1, alpha2) = structure_constants(params);
        let outer = &qi * (&qi + Rational::one());
        CasimirCoefficients {
            xyz: q.pow(-2) - Rational::one(),
            xx: &qi * &alpha1,
            x: &outer * &alpha2,
            y: &outer * &qi,
            z: outer,
        }
    }
}

pub fn casimir(gens: &OperatorTriple, c: &CasimirCoefficients) -> QDiffOperator {
    let q = gens.x.q();
    let xyz = &(&gens.x * &gens.y) * &gens.z;
    let xx = &gens.x * &gens.x;
    lin(
        q,
        &[
            (&c.xyz, &xyz),
            (&c.xx, &xx),
            (&c.x, &gens.x),
            (&c.y, &gens.y),
            (&c.z, &gens.z),
        ],
        &Rational::zero(),
    )
}

fn centrality_checks(params: &QParams, gens: &OperatorTriple, cas: &QDiffOperator) -> Vec<Check> {
    let zero = QDiffOperator::zero(params.q());
    [("x", &gens.x), ("y", &gens.y), ("z", &gens.z)]
        .into_iter()
        .map(|(label, g)| {
            Relation::new(
                &format!("casimir_commutes_with_{label}"),
                "casimir",
                cas.commutator(g),
                zero.clone(),
            )
            .check(params)
        })
        .collect()
}

/// `Some(c)` when `Q = c I`. On Laurent polynomials the Casimir collapses to
/// a scalar, which makes centrality easy to satisfy but still worth checking.
pub fn casimir_scalar(cas: &QDiffOperator) -> Option<Rational> {
    let mut terms = cas.terms();
    match (terms.next(), terms.next()) {
        (None, _) => Some(Rational::zero()),
        (Some((0, c)), None) if c.is_polynomial() && c.degree() <= Some(0) => Some(c.coeff(0)),
        _ => None,
    }
}

/// `[Q, X'] = [Q, Y'] = [Q, Z'] = 0`.
pub fn casimir_centrality(params: &QParams) -> Vec<Check> {
    casimir_centrality_with(params, &CasimirCoefficients::new(params))
}

pub fn casimir_centrality_with(params: &QParams, coeffs: &CasimirCoefficients) -> Vec<Check> {
    match affine_generators(params) {
        Ok(gens) => centrality_checks(params, &gens, &casimir(&gens, coeffs)),
        Err(e) => vec![Check::from_result("casimir", "casimir", Err(e))],
    }
}

/// Constants of the q-Hahn relations realized by `A -> L`, `B -> Z'`, `C -> M`.
/// `gamma_4` involves the Casimir and stays an operator.
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraConstants {
    pub alpha1: Rational,
    pub alpha2: Rational,
    pub pencil_mu: Rational,
    pub gamma1: Rational,
    pub gamma2: Rational,
    pub gamma3: Rational,
    pub gamma4: QDiffOperator,
}

impl AlgebraConstants {
    pub fn new(params: &QParams, mu: &Rational, casimir: &QDiffOperator) -> Self {
        let q = params.q();
        let one = Rational::one();
        let (alpha1, alpha2) = structure_constants(params);
        let qm1 = q - &one;
        let qp1 = q + &one;
        let gamma4 =
            &casimir.scale(&-(mu * q * q * &qm1)) + &QDiffOperator::scalar(q, mu * mu * &alpha1);
        AlgebraConstants {
            gamma1: mu * &alpha2 + &one,
            gamma2: mu * &alpha1,
            gamma3: mu * q.inv() * &qp1 * &qp1 * &qm1,
            gamma4,
            alpha1,
            alpha2,
            pencil_mu: mu.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QHahnReport {
    pub constants: AlgebraConstants,
    /// `mu = 0`: the pencil collapses to `X'` and `gamma_2 = gamma_3 = 0`.
    pub degenerate: bool,
    /// `Q` as a scalar, when it reduces to one.
    pub casimir_value: Option<Rational>,
    pub pencil: QDiffOperator,
    pub m: QDiffOperator,
    pub checks: Vec<Check>,
}

/// The three q-Hahn relations for the pencil `L = X' + mu Y'`, with
/// `M = qLZ' - Z'L - gamma_1`:
///
/// ```text
/// qLZ' - Z'L = M + gamma_1
/// qZ'M - MZ' = gamma_2
/// qML - LM   = gamma_3 Z' + gamma_4
/// ```
///
/// `M` is built from the `gamma_1` in `k`, so corrupting it shifts `M` and
/// shows up in the other two relations.
pub fn qhahn_relations(
    gens: &OperatorTriple,
    k: &AlgebraConstants,
) -> (QDiffOperator, QDiffOperator, Vec<Relation>) {
    let q = gens.x.q();
    let scalar = |c: &Rational| QDiffOperator::scalar(q, c.clone());
    let pencil = &gens.x + &gens.y.scale(&k.pencil_mu);
    let m = &pencil.q_commutator(&gens.z, q) - &scalar(&k.gamma1);
    let rels = vec![
        Relation::new(
            "qhahn_lz",
            "com rel LZ",
            pencil.q_commutator(&gens.z, q),
            &m + &scalar(&k.gamma1),
        ),
        Relation::new(
            "qhahn_zm",
            "com rel ZM",
            gens.z.q_commutator(&m, q),
            scalar(&k.gamma2),
        ),
        Relation::new(
            "qhahn_ml",
            "com rel ML",
            m.q_commutator(&pencil, q),
            &gens.z.scale(&k.gamma3) + &k.gamma4,
        ),
    ];
    (pencil, m, rels)
}

pub fn qhahn_embedding(params: &QParams, mu: &Rational) -> Result<QHahnReport> {
    let gens = affine_generators(params)?;
    let cas = casimir(&gens, &CasimirCoefficients::new(params));
    let k = AlgebraConstants::new(params, mu, &cas);
    let (pencil, m, rels) = qhahn_relations(&gens, &k);
    let checks = rels
        .iter()
        .map(|r| r.check(params).with_param("mu", mu))
        .collect();
    Ok(QHahnReport {
        degenerate: mu.is_zero(),
        casimir_value: casimir_scalar(&cas),
        constants: k,
        pencil,
        m,
        checks,
    })
}

/// All relation suites at one parameter point and pencil parameter.
pub fn verify_all(params: &QParams, mu: &Rational) -> Vec<Check> {
    let mut out = verify_raw_relations(params);
    out.extend(verify_standardized_relations(params));
    out.extend(casimir_centrality(params));
    match qhahn_embedding(params, mu) {
        Ok(r) => out.extend(r.checks),
        Err(e) => out.push(Check::from_result(
            "qhahn_embedding",
            "com rel LZ-ML",
            Err(e),
        )),
    }
    out
}
