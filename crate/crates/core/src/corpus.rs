//! The example ideals and the checks run against them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::monomial_count;
use crate::error::{AlgebraError, Result};
use crate::field::{CoefficientField, Field, FieldKind};
use crate::groebner::Ideal;
use crate::ideal_ops::{ideal_power, is_smooth, saturate, sat_degree, SmoothnessCertificate};
use crate::monomial::monomials_of_degree;
use crate::poly::{PolyRing, Polynomial};
use crate::resolution::{arith_reg, geom_reg};
use crate::schur::{degree_bound, DegreeSequence};

/// Reseeds allowed before a random draw that fails its certificate is
/// reported as an error.
const MAX_RESEEDS: u64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hyperplane,
    Caviglia,
    CoordPoints,
    Rnc,
    TwistedCubic,
    CompleteIntersection,
    GenericRegseq,
    Veronese,
    TwoPlanes,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Hyperplane,
        Family::Caviglia,
        Family::CoordPoints,
        Family::Rnc,
        Family::TwistedCubic,
        Family::CompleteIntersection,
        Family::GenericRegseq,
        Family::Veronese,
        Family::TwoPlanes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hyperplane => "hyperplane",
            Family::Caviglia => "caviglia",
            Family::CoordPoints => "coord_points",
            Family::Rnc => "rnc",
            Family::TwistedCubic => "twisted_cubic",
            Family::CompleteIntersection => "complete_intersection",
            Family::GenericRegseq => "generic_regseq",
            Family::Veronese => "veronese",
            Family::TwoPlanes => "two_planes",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| AlgebraError::InvalidInput(format!("unknown example `{s}`")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degrees: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleSpec {
    pub name: Family,
    pub params: ExampleParams,
}

impl ExampleSpec {
    pub fn new(name: Family) -> Self {
        ExampleSpec {
            name,
            params: ExampleParams::default(),
        }
    }

    pub fn r(mut self, r: usize) -> Self {
        self.params.r = Some(r);
        self
    }

    pub fn d(mut self, d: u32) -> Self {
        self.params.d = Some(d);
        self
    }

    pub fn degrees(mut self, degrees: &[u32]) -> Self {
        self.params.degrees = Some(degrees.to_vec());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.params.seed = Some(seed);
        self
    }

    /// Fill in the defaults of the family, so that equal examples compare
    /// and print equal.
    pub fn normalized(&self) -> ExampleSpec {
        let p = &self.params;
        let mut out = ExampleParams::default();
        match self.name {
            Family::Hyperplane => {
                out.r = Some(p.r.unwrap_or(2));
                out.d = Some(p.d.unwrap_or(2));
            }
            Family::Caviglia => out.d = Some(p.d.unwrap_or(3)),
            Family::CoordPoints => out.r = Some(p.r.unwrap_or(2)),
            Family::Rnc => out.r = Some(p.r.unwrap_or(4)),
            Family::TwistedCubic | Family::Veronese | Family::TwoPlanes => {}
            Family::CompleteIntersection => {
                let degrees = p.degrees.clone().unwrap_or_else(|| vec![2, 2]);
                out.r = Some(p.r.unwrap_or(degrees.len() + 1));
                out.degrees = Some(degrees);
                out.seed = Some(p.seed.unwrap_or(0));
            }
            Family::GenericRegseq => {
                let degrees = match (&p.degrees, p.r, p.d) {
                    (Some(ds), _, _) => ds.clone(),
                    (None, r, d) => vec![d.unwrap_or(2); r.unwrap_or(2) + 1],
                };
                out.r = Some(p.r.unwrap_or(degrees.len().saturating_sub(1)));
                out.degrees = Some(degrees);
                out.seed = Some(p.seed.unwrap_or(0));
            }
        }
        ExampleSpec {
            name: self.name,
            params: out,
        }
    }
}

impl fmt::Display for ExampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        let p = &self.params;
        let mut parts = Vec::new();
        if let Some(r) = p.r {
            parts.push(format!("r={r}"));
        }
        if let Some(d) = p.d {
            parts.push(format!("d={d}"));
        }
        if let Some(ds) = &p.degrees {
            let s: Vec<String> = ds.iter().map(u32::to_string).collect();
            parts.push(format!("degs={}", s.join(",")));
        }
        if let Some(s) = p.seed {
            parts.push(format!("seed={s}"));
        }
        if !parts.is_empty() {
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// What is known about an example before computing anything.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleMetadata {
    /// Projective dimension of the zero scheme, `-1` when empty.
    pub expected_dimension: i64,
    /// `None` when smoothness depends on a random draw.
    pub expected_smooth: Option<bool>,
    /// Castelnuovo–Mumford regularity of the saturated ideal, when known.
    pub expected_reg: Option<i64>,
    pub description: String,
}

pub struct Example<F: Field> {
    pub spec: ExampleSpec,
    pub ideal: Ideal<F>,
    pub metadata: ExampleMetadata,
    smoothness: OnceLock<Result<Option<SmoothnessCertificate>>>,
}

impl<F: Field> Example<F> {
    /// Generator degrees of the ideal, as the theorem bounds read them.
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        let d: Vec<u32> = self
            .ideal
            .generators()
            .iter()
            .filter_map(|g| g.form_degree())
            .collect();
        DegreeSequence::new(d, self.ideal.ring().r())
    }

    /// Jacobian certificate for the zero scheme; `None` when it is empty.
    pub fn smoothness(&self) -> Result<Option<SmoothnessCertificate>> {
        self.smoothness
            .get_or_init(|| {
                if self.ideal.dimension()? < 0 {
                    Ok(None)
                } else {
                    is_smooth(&self.ideal).map(Some)
                }
            })
            .clone()
    }

    /// Smooth, or empty.
    pub fn is_smooth(&self) -> Result<bool> {
        Ok(self.smoothness()?.is_none_or(|c| c.smooth))
    }
}

fn bad(spec: &ExampleSpec, why: &str) -> AlgebraError {
    AlgebraError::InvalidInput(format!("{spec}: {why}"))
}

fn random_form<F: Field>(ring: &Arc<PolyRing<F>>, d: u32, rng: &mut ChaCha8Rng) -> Polynomial<F> {
    let field = ring.field();
    let terms = monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .map(|m| (field.from_i64(rng.gen_range(-9..=9)), m))
        .collect();
    ring.from_terms(terms)
}

/// Random forms of the given degrees whose zero scheme has codimension
/// equal to their number, certified by a dimension computation.
fn generic_forms<F: Field>(
    ring: &Arc<PolyRing<F>>,
    degrees: &[u32],
    seed: u64,
) -> Result<Ideal<F>> {
    let want = ring.r() as i64 - degrees.len() as i64;
    for attempt in 0..MAX_RESEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9)));
        let gens: Vec<Polynomial<F>> = degrees.iter().map(|&d| random_form(ring, d, &mut rng)).collect();
        if gens.iter().any(Polynomial::is_zero) {
            continue;
        }
        let ideal = Ideal::new(ring, gens)?;
        if ideal.dimension()? == want {
            return Ok(ideal);
        }
    }
    Err(AlgebraError::InvalidInput(format!(
        "no regular sequence of degrees {degrees:?} after {MAX_RESEEDS} seeds"
    )))
}

/// Construct an example over `field`. Deterministic in `(spec, field)`.
pub fn build_example<F: Field>(field: F, spec: &ExampleSpec) -> Result<Example<F>> {
    let spec = spec.normalized();
    let p = &spec.params;
    let ring_of = |n: usize| PolyRing::with_vars(field.clone(), n);
    let (ideal, metadata) = match spec.name {
        Family::Hyperplane => {
            let (r, d) = (p.r.unwrap(), p.d.unwrap());
            if r == 0 || d == 0 {
                return Err(bad(&spec, "need r >= 1 and d >= 1"));
            }
            let ring = ring_of(r + 1)?;
            let l = (0..=r).fold(ring.zero(), |acc, i| &acc + &ring.var(i));
            let gens = (0..=r).map(|i| &ring.var(i).pow(d - 1) * &l).collect();
            let meta = ExampleMetadata {
                expected_dimension: r as i64 - 1,
                expected_smooth: Some(true),
                expected_reg: Some(1),
                description: "x_i^(d-1) times a linear form".into(),
            };
            (Ideal::new(&ring, gens)?, meta)
        }
        Family::Caviglia => {
            let d = p.d.unwrap();
            if d < 2 {
                return Err(bad(&spec, "need d >= 2"));
            }
            let ring = ring_of(4)?;
            let x = |i| ring.var(i);
            let gens = vec![
                x(0).pow(d),
                x(1).pow(d),
                &(&x(0) * &x(2).pow(d - 1)) - &(&x(1) * &x(3).pow(d - 1)),
            ];
            let meta = ExampleMetadata {
                expected_dimension: 1,
                expected_smooth: Some(false),
                expected_reg: None,
                description: "non-reduced structure on a line in P^3".into(),
            };
            (Ideal::new(&ring, gens)?, meta)
        }
        Family::CoordPoints => {
            let r = p.r.unwrap();
            if r == 0 {
                return Err(bad(&spec, "need r >= 1"));
            }
            let ring = ring_of(r + 1)?;
            let mut gens = Vec::new();
            for i in 0..=r {
                for j in i + 1..=r {
                    gens.push(&ring.var(i) * &ring.var(j));
                }
            }
            let meta = ExampleMetadata {
                expected_dimension: 0,
                expected_smooth: Some(true),
                expected_reg: Some(2),
                description: "the r + 1 coordinate points".into(),
            };
            (Ideal::new(&ring, gens)?, meta)
        }
        Family::Rnc | Family::TwistedCubic => {
            let r = if spec.name == Family::TwistedCubic { 3 } else { p.r.unwrap() };
            if r < 2 {
                return Err(bad(&spec, "need r >= 2"));
            }
            let ring = ring_of(r + 1)?;
            let x = |i| ring.var(i);
            // 2x2 minors of [[x_0 .. x_{r-1}], [x_1 .. x_r]]
            let mut gens = Vec::new();
            for i in 0..r {
                for j in i + 1..r {
                    gens.push(&(&x(i) * &x(j + 1)) - &(&x(i + 1) * &x(j)));
                }
            }
            let meta = ExampleMetadata {
                expected_dimension: 1,
                expected_smooth: Some(true),
                expected_reg: Some(2),
                description: "rational normal curve".into(),
            };
            (Ideal::new(&ring, gens)?, meta)
        }
        Family::CompleteIntersection | Family::GenericRegseq => {
            let degrees = p.degrees.clone().unwrap();
            let r = p.r.unwrap();
            if degrees.is_empty() || degrees.contains(&0) {
                return Err(bad(&spec, "degrees must be positive"));
            }
            let regseq = spec.name == Family::GenericRegseq;
            if regseq && degrees.len() != r + 1 {
                return Err(bad(&spec, "a regular sequence needs r + 1 forms"));
            }
            if !regseq && degrees.len() > r {
                return Err(bad(&spec, "a complete intersection needs at most r forms"));
            }
            let ring = ring_of(r + 1)?;
            let ideal = generic_forms(&ring, &degrees, p.seed.unwrap())?;
            let meta = if regseq {
                ExampleMetadata {
                    expected_dimension: -1,
                    expected_smooth: Some(true),
                    expected_reg: None,
                    description: "generic forms, empty zero scheme".into(),
                }
            } else {
                let reg = degrees.iter().map(|&d| d as i64 - 1).sum::<i64>() + 1;
                ExampleMetadata {
                    expected_dimension: (r - degrees.len()) as i64,
                    expected_smooth: None,
                    expected_reg: Some(reg),
                    description: "generic complete intersection".into(),
                }
            };
            (ideal, meta)
        }
        Family::Veronese => {
            let ring = ring_of(6)?;
            // symmetric matrix [[x0 x1 x2] [x1 x3 x4] [x2 x4 x5]]
            let m = |i: usize, j: usize| {
                let idx = [[0, 1, 2], [1, 3, 4], [2, 4, 5]];
                ring.var(idx[i][j])
            };
            let mut gens: Vec<Polynomial<F>> = Vec::new();
            for (r1, r2) in [(0, 1), (0, 2), (1, 2)] {
                for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
                    let g = &(&m(r1, c1) * &m(r2, c2)) - &(&m(r1, c2) * &m(r2, c1));
                    let g = g.monic();
                    if !gens.contains(&g) {
                        gens.push(g);
                    }
                }
            }
            let meta = ExampleMetadata {
                expected_dimension: 2,
                expected_smooth: Some(true),
                expected_reg: Some(2),
                description: "Veronese surface in P^5".into(),
            };
            (Ideal::new(&ring, gens)?, meta)
        }
        Family::TwoPlanes => {
            let ring = ring_of(4)?;
            let meta = ExampleMetadata {
                expected_dimension: 2,
                expected_smooth: Some(false),
                expected_reg: Some(2),
                description: "two planes in P^3 meeting in a line".into(),
            };
            (Ideal::new(&ring, vec![&ring.var(0) * &ring.var(1)])?, meta)
        }
    };
    Ok(Example {
        spec,
        ideal,
        metadata,
        smoothness: OnceLock::new(),
    })
}

/// The examples every suite run covers by default.
pub fn default_corpus() -> Vec<ExampleSpec> {
    use Family::*;
    vec![
        ExampleSpec::new(Hyperplane).r(2).d(2),
        ExampleSpec::new(Hyperplane).r(2).d(3),
        ExampleSpec::new(Hyperplane).r(3).d(2),
        ExampleSpec::new(CoordPoints).r(2),
        ExampleSpec::new(Rnc).r(4),
        ExampleSpec::new(TwistedCubic),
        ExampleSpec::new(CompleteIntersection).degrees(&[2, 2]).r(3),
        ExampleSpec::new(CompleteIntersection).degrees(&[3, 2]).r(4),
        ExampleSpec::new(GenericRegseq).degrees(&[2, 2, 2]).r(2),
        ExampleSpec::new(Veronese),
        ExampleSpec::new(TwoPlanes),
        ExampleSpec::new(Caviglia).d(3),
        ExampleSpec::new(Caviglia).d(4),
        ExampleSpec::new(Caviglia).d(5),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
            Status::Error => "error",
        })
    }
}

/// Evidence attached to a report; which parts are present depends on the
/// check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Degrees `t` with `sat(J)_t != J_t`.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub gap_degrees: Vec<u32>,
    /// `dim sat(J)_t - dim J_t` for `t` below the saturation degree.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub gap_dims: BTreeMap<u32, u64>,
    /// First degree from which ordinary and symbolic powers agree.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agreement_from: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub smoothness: Option<SmoothnessCertificate>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub regularity: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sharp: Option<bool>,
    /// `(t, dim J_t, dim S_t)` probes.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub graded_dims: Vec<(u32, u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub example: ExampleSpec,
    pub a: u32,
    pub bound_kind: String,
    pub bound_value: Option<i64>,
    pub computed_value: Option<i64>,
    pub pass: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub field: CoefficientField,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl VerificationReport {
    /// A theorem-level failure: not a skipped hypothesis, not a crash.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

const PRIME_CAVEAT: &str = "smoothness checked over a prime field as a stand-in for C";

struct Draft {
    bound: Option<i64>,
    computed: Option<i64>,
    status: Status,
    witness: Option<Witness>,
    note: Option<String>,
}

fn finish<F: Field>(ex: &Example<F>, a: u32, kind: &str, start: Instant, r: Result<Draft>) -> VerificationReport {
    let field = ex.ideal.ring().field().descriptor();
    let d = r.unwrap_or_else(|e| Draft {
        bound: None,
        computed: None,
        status: Status::Error,
        witness: None,
        note: Some(e.to_string()),
    });
    let note = match (d.note, field.kind) {
        (Some(n), FieldKind::Prime) if d.status != Status::Error => Some(format!("{n}; {PRIME_CAVEAT}")),
        (None, FieldKind::Prime) => Some(PRIME_CAVEAT.to_string()),
        (n, _) => n,
    };
    VerificationReport {
        example: ex.spec.clone(),
        a,
        bound_kind: kind.to_string(),
        bound_value: d.bound,
        computed_value: d.computed,
        pass: d.status == Status::Pass,
        status: d.status,
        witness: d.witness,
        field,
        elapsed_ms: start.elapsed().as_millis() as u64,
        note,
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// `sat.deg(J^a) <= a d_0 + d_1 + ... + d_r - r` for `J` with smooth zero
/// scheme. A singular scheme gives `not-applicable`, with the value still
/// recorded.
pub fn verify_thm_a<F: Field>(ex: &Example<F>, a: u32) -> VerificationReport {
    let start = Instant::now();
    let run = || -> Result<Draft> {
        let ds = ex.degree_sequence()?;
        let bound = degree_bound(a, &ds);
        let smooth = ex.smoothness()?;
        let sd = sat_degree(&ideal_power(&ex.ideal, a)?)?;
        let computed = sd.sat_degree as i64;
        let applicable = smooth.as_ref().is_none_or(|c| c.smooth);
        Ok(Draft {
            bound: Some(bound),
            computed: Some(computed),
            status: if applicable { verdict(computed <= bound) } else { Status::NotApplicable },
            note: (!applicable).then(|| "zero scheme is singular".to_string()),
            witness: Some(Witness {
                gap_degrees: sd.witness_degrees.clone(),
                gap_dims: sd.gap_dims.clone(),
                agreement_from: applicable.then_some(computed),
                smoothness: smooth,
                ..Witness::default()
            }),
        })
    };
    finish(ex, a, "thmA", start, run())
}

/// `sat.deg(I^a) <= a m` for the saturated ideal of a smooth curve with
/// `m = reg(I)`.
pub fn verify_thm_b<F: Field>(ex: &Example<F>, a: u32) -> VerificationReport {
    let start = Instant::now();
    let run = || -> Result<Draft> {
        if ex.ideal.dimension()? != 1 {
            return Err(AlgebraError::InvalidInput("not a curve".into()));
        }
        if !sat_degree(&ex.ideal)?.is_saturated() {
            return Err(AlgebraError::InvalidInput("ideal is not saturated".into()));
        }
        let m = geom_reg(&ex.ideal)?.value;
        let bound = a as i64 * m;
        let smooth = ex.smoothness()?;
        let sd = sat_degree(&ideal_power(&ex.ideal, a)?)?;
        let computed = sd.sat_degree as i64;
        let applicable = smooth.as_ref().is_none_or(|c| c.smooth);
        Ok(Draft {
            bound: Some(bound),
            computed: Some(computed),
            status: if applicable { verdict(computed <= bound) } else { Status::NotApplicable },
            note: (!applicable).then(|| "curve is singular".to_string()),
            witness: Some(Witness {
                gap_degrees: sd.witness_degrees.clone(),
                gap_dims: sd.gap_dims.clone(),
                agreement_from: applicable.then_some(computed),
                smoothness: smooth,
                regularity: Some(m),
                sharp: Some(computed == bound),
                ..Witness::default()
            }),
        })
    };
    finish(ex, a, "thmB", start, run())
}

/// Sharpness of the Macaulay bound for `r + 1` forms in `r + 1` variables:
/// `(J^a)_t = S_t` at `t = a d_0 + ... + d_r - r` and not one degree lower.
pub fn verify_macaulay<F: Field>(ex: &Example<F>, a: u32) -> VerificationReport {
    let start = Instant::now();
    let run = || -> Result<Draft> {
        let ds = ex.degree_sequence()?;
        let n = ex.ideal.nvars();
        if ds.d.len() != n || ex.ideal.dimension()? != -1 {
            return Err(AlgebraError::InvalidInput("not a regular sequence of r + 1 forms".into()));
        }
        let bound = degree_bound(a, &ds);
        let ja = ideal_power(&ex.ideal, a)?;
        let mut probes = Vec::new();
        for t in [bound - 1, bound] {
            if t >= 0 {
                probes.push((t as u32, ja.graded_dim(t as u32)?, monomial_count(n, t)));
            }
        }
        let full_at_bound = probes.last().is_some_and(|p| p.1 == p.2);
        let short_below = bound == 0 || probes.first().is_some_and(|p| p.1 < p.2);
        let computed = sat_degree(&ja)?.sat_degree as i64;
        Ok(Draft {
            bound: Some(bound),
            computed: Some(computed),
            status: verdict(full_at_bound && short_below && computed == bound),
            note: None,
            witness: Some(Witness {
                graded_dims: probes,
                sharp: Some(computed == bound),
                ..Witness::default()
            }),
        })
    };
    finish(ex, a, "macaulay", start, run())
}

/// `arith.reg(J^a) <= a d_0 + d_1 + ... + d_r - r` under the same smoothness
/// hypothesis as [`verify_thm_a`].
pub fn verify_corollary_c<F: Field>(ex: &Example<F>, a: u32) -> VerificationReport {
    let start = Instant::now();
    let run = || -> Result<Draft> {
        let ds = ex.degree_sequence()?;
        let bound = degree_bound(a, &ds);
        let smooth = ex.smoothness()?;
        let applicable = smooth.as_ref().is_none_or(|c| c.smooth);
        let computed = arith_reg(&ideal_power(&ex.ideal, a)?)?;
        Ok(Draft {
            bound: Some(bound),
            computed: Some(computed),
            status: if applicable { verdict(computed <= bound) } else { Status::NotApplicable },
            note: (!applicable).then(|| "zero scheme is singular".to_string()),
            witness: Some(Witness {
                smoothness: smooth,
                regularity: Some(computed),
                ..Witness::default()
            }),
        })
    };
    finish(ex, a, "corollaryC", start, run())
}

/// `arith.reg(J) = max(reg(sat J), sat.deg(J))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FootnoteCheck {
    pub arith_reg: i64,
    pub sat_reg: i64,
    pub sat_degree: i64,
    pub holds: bool,
}

pub fn footnote_check<F: Field>(j: &Ideal<F>) -> Result<FootnoteCheck> {
    let reg = arith_reg(j)?;
    let sat_reg = arith_reg(&saturate(j)?)?;
    let sd = sat_degree(j)?.sat_degree as i64;
    Ok(FootnoteCheck {
        arith_reg: reg,
        sat_reg,
        sat_degree: sd,
        holds: reg == sat_reg.max(sd),
    })
}

/// Whether every power `I^a`, `a <= a_max`, is saturated.
pub fn zariski_check<F: Field>(i: &Ideal<F>, a_max: u32) -> Result<Vec<(u32, u32)>> {
    (1..=a_max)
        .map(|a| Ok((a, sat_degree(&ideal_power(i, a)?)?.sat_degree)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub a_max: u32,
    /// Worker threads; `0` means rayon's default.
    pub jobs: usize,
    /// Run powers beyond the square on the surface examples.
    pub heavy: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            a_max: 3,
            jobs: 0,
            heavy: false,
        }
    }
}

fn reports_for<F: Field>(field: F, spec: &ExampleSpec, opts: &SuiteOptions) -> Vec<VerificationReport> {
    let ex = match build_example(field.clone(), spec) {
        Ok(ex) => ex,
        Err(e) => {
            return vec![VerificationReport {
                example: spec.clone(),
                a: 0,
                bound_kind: "build".into(),
                bound_value: None,
                computed_value: None,
                pass: false,
                status: Status::Error,
                witness: None,
                field: field.descriptor(),
                elapsed_ms: 0,
                note: Some(e.to_string()),
            }]
        }
    };
    let a_max = if ex.metadata.expected_dimension >= 2 && !opts.heavy {
        opts.a_max.min(2)
    } else {
        opts.a_max
    };
    // the curve bound is about saturated ideals of curves
    let curve = ex.metadata.expected_dimension == 1
        && sat_degree(&ex.ideal).is_ok_and(|s| s.is_saturated());
    let mut out = Vec::new();
    for a in 1..=a_max {
        out.push(verify_thm_a(&ex, a));
        if ex.spec.name == Family::GenericRegseq {
            out.push(verify_macaulay(&ex, a));
        }
        if curve {
            out.push(verify_thm_b(&ex, a));
        }
        out.push(verify_corollary_c(&ex, a));
    }
    out
}

/// Runs every check on every example, cases in parallel; reports come back
/// in input order.
pub fn run_suite<F: Field>(field: F, specs: &[ExampleSpec], opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| AlgebraError::InvalidInput(format!("thread pool: {e}")))?;
    let per_case: Vec<Vec<VerificationReport>> = pool.install(|| {
        specs
            .par_iter()
            .map(|s| reports_for(field.clone(), s, opts))
            .collect()
    });
    Ok(per_case.into_iter().flatten().collect())
}

pub fn report_table(reports: &[VerificationReport]) -> String {
    let show = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
    let rows: Vec<[String; 7]> = reports
        .iter()
        .map(|r| {
            [
                r.example.to_string(),
                r.a.to_string(),
                r.bound_kind.clone(),
                show(r.bound_value),
                show(r.computed_value),
                r.status.to_string(),
                format!("{}ms", r.elapsed_ms),
            ]
        })
        .collect();
    let header = ["example", "a", "check", "bound", "computed", "status", "time"];
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for row in &rows {
        s.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn build(spec: ExampleSpec) -> Example<PrimeField> {
        build_example(PrimeField::default(), &spec).unwrap()
    }

    #[test]
    fn constructions() {
        let pts = build(ExampleSpec::new(Family::CoordPoints));
        assert_eq!(pts.ideal.to_string(), "(x0*x1, x0*x2, x1*x2)");
        let cav = build(ExampleSpec::new(Family::Caviglia).d(3));
        assert_eq!(cav.ideal.generators().len(), 3);
        assert_eq!(cav.ideal.generators()[2].to_string(), "x0*x2^2 - x1*x3^2");
        let h = build(ExampleSpec::new(Family::Hyperplane));
        assert_eq!(h.ideal.generators()[0].to_string(), "x0^2 + x0*x1 + x0*x2");
        assert_eq!(build(ExampleSpec::new(Family::Rnc)).ideal.generators().len(), 6);
        assert_eq!(build(ExampleSpec::new(Family::Veronese)).ideal.generators().len(), 6);
        for f in Family::ALL {
            let ex = build(ExampleSpec::new(f));
            assert_eq!(ex.ideal.dimension().unwrap(), ex.metadata.expected_dimension, "{f}");
        }
    }

    #[test]
    fn deterministic_random_draws() {
        let s = ExampleSpec::new(Family::GenericRegseq).degrees(&[2, 2, 2]).seed(7);
        let a = build(s.clone());
        let b = build(s);
        assert_eq!(a.ideal.generators(), b.ideal.generators());
        assert_eq!(a.ideal.dimension().unwrap(), -1);
    }

    #[test]
    fn bad_params() {
        let f = PrimeField::default();
        assert!(build_example(f, &ExampleSpec::new(Family::CompleteIntersection).degrees(&[2, 2, 2]).r(2)).is_err());
        assert!(build_example(f, &ExampleSpec::new(Family::Hyperplane).d(0)).is_err());
        assert!("nope".parse::<Family>().is_err());
        assert_eq!("coord_points".parse::<Family>().unwrap(), Family::CoordPoints);
    }

    #[test]
    fn verifiers() {
        let h = build(ExampleSpec::new(Family::Hyperplane));
        let r = verify_thm_a(&h, 2);
        assert_eq!((r.computed_value, r.bound_value, r.status), (Some(4), Some(6), Status::Pass));
        let pts = build(ExampleSpec::new(Family::CoordPoints));
        let r = verify_thm_a(&pts, 2);
        assert_eq!((r.computed_value, r.bound_value), (Some(4), Some(6)));
        let cav = build(ExampleSpec::new(Family::Caviglia).d(4));
        let r = verify_thm_a(&cav, 1);
        assert_eq!(r.status, Status::NotApplicable);
        assert!(r.computed_value.unwrap() > 9);
        let g = build(ExampleSpec::new(Family::GenericRegseq));
        let r = verify_macaulay(&g, 1);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.witness.unwrap().graded_dims, vec![(3, 9, 10), (4, 15, 15)]);
        let tc = build(ExampleSpec::new(Family::TwistedCubic));
        let r = verify_thm_b(&tc, 2);
        assert_eq!(r.status, Status::Pass);
        assert!(r.computed_value.unwrap() <= 4);
        assert_eq!(verify_thm_b(&pts, 1).status, Status::Error);
    }

    #[test]
    fn suite_order_and_json() {
        let specs = vec![ExampleSpec::new(Family::CoordPoints), ExampleSpec::new(Family::TwistedCubic)];
        let opts = SuiteOptions { a_max: 2, jobs: 2, heavy: false };
        let reps = run_suite(PrimeField::default(), &specs, &opts).unwrap();
        assert_eq!(reps[0].example.name, Family::CoordPoints);
        assert_eq!(reps.last().unwrap().example.name, Family::TwistedCubic);
        assert!(reps.iter().all(|r| r.status == Status::Pass));
        let v = serde_json::to_value(&reps[0]).unwrap();
        for key in ["example", "a", "bound_kind", "bound_value", "computed_value", "pass", "field", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert!(run_suite(PrimeField::default(), &[], &opts).unwrap().is_empty());
        let t = report_table(&reps);
        assert!(t.starts_with("example"));
    }

    #[test]
    fn footnote_and_zariski() {
        let pts = build(ExampleSpec::new(Family::CoordPoints));
        let sq = ideal_power(&pts.ideal, 2).unwrap();
        let f = footnote_check(&sq).unwrap();
        assert!(f.holds);
        assert_eq!((f.sat_degree, f.arith_reg), (4, 4));
        let ci = build(ExampleSpec::new(Family::CompleteIntersection));
        assert!(zariski_check(&ci.ideal, 3).unwrap().iter().all(|&(_, s)| s == 0));
    }
}
