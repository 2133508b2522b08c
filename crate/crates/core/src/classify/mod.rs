//! Koszul-algebra classes, the full classification pipeline and its report.

mod audit;
mod oracle;
mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::{Field, FieldKind, Gf32003, Rational};
use crate::homology::{build_koszul_model, truncated_exterior_check, HomologyAlgebra, KoszulModel};
use crate::ideal::MonomialIdeal;
use crate::invariants::{bass_mu0_mu1, count_p_structural, dependent_row_count_generic};
use crate::resolution::{resolve, Resolution};

pub use audit::{audit_conjectures, shape_case, shape_predicts, AuditRecord, ShapeCase};
pub use oracle::{canonical_betti_from, canonical_betti_oracle, canonical_betti_with, MAX_ORACLE_LEN};
pub use series::{bass_series, expand_series, RationalSeries};

/// Number of Bass numbers reported from the series.
pub const SERIES_TERMS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KoszulClass {
    C3,
    T,
    B,
    G(usize),
    H(usize, usize),
    Unclassified(String),
}

impl KoszulClass {
    pub fn label(&self) -> String {
        match self {
            KoszulClass::C3 => "C(3)".into(),
            KoszulClass::T => "T".into(),
            KoszulClass::B => "B".into(),
            KoszulClass::G(r) => format!("G({r})"),
            KoszulClass::H(p, q) => format!("H({p},{q})"),
            KoszulClass::Unclassified(_) => "Unclassified".into(),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            KoszulClass::C3 => "C",
            KoszulClass::T => "T",
            KoszulClass::B => "B",
            KoszulClass::G(_) => "G",
            KoszulClass::H(..) => "H",
            KoszulClass::Unclassified(_) => "Unclassified",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            KoszulClass::C3 => vec![3],
            KoszulClass::G(r) => vec![*r],
            KoszulClass::H(p, q) => vec![*p, *q],
            _ => Vec::new(),
        }
    }

    pub fn is_classified(&self) -> bool {
        !matches!(self, KoszulClass::Unclassified(_))
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "tag": self.tag(), "params": self.params(), "label": self.label() });
        if let KoszulClass::Unclassified(reason) = self {
            v["reason"] = json!(reason);
        }
        v
    }
}

impl fmt::Display for KoszulClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KoszulClass::Unclassified(reason) => write!(f, "Unclassified ({reason})"),
            other => write!(f, "{}", other.label()),
        }
    }
}

impl FromStr for KoszulClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidArgument(format!("unknown class label '{s}'"));
        let args = |body: &str| -> Result<Vec<usize>> {
            body.split(',').map(|a| a.parse::<usize>().map_err(|_| bad())).collect()
        };
        match s.as_str() {
            "C(3)" | "C3" => return Ok(KoszulClass::C3),
            "T" => return Ok(KoszulClass::T),
            "B" => return Ok(KoszulClass::B),
            "Unclassified" => return Ok(KoszulClass::Unclassified(String::new())),
            _ => {}
        }
        let inner = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        if let Some(body) = inner("G(") {
            if let [r] = args(body)?[..] {
                return Ok(KoszulClass::G(r));
            }
        }
        if let Some(body) = inner("H(") {
            if let [p, q] = args(body)?[..] {
                return Ok(KoszulClass::H(p, q));
            }
        }
        Err(bad())
    }
}

/// Homology-side values of the invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleInvariants {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub dims: (usize, usize, usize),
}

/// Everything computed for one ideal.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub ideal: String,
    pub field: FieldKind,
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub betti: [usize; 4],
    /// Structural `p` from the columns of `f2`.
    pub p: usize,
    pub q: usize,
    /// `rank δ2` from homology.
    pub r: usize,
    pub rhat: usize,
    pub mu0: usize,
    pub mu1: usize,
    pub generic: bool,
    pub golod: bool,
    pub cls: KoszulClass,
    /// `μ⁰, μ¹, ...` from the series when it exists, otherwise `[μ⁰, μ¹]`.
    pub mu: Vec<i64>,
    pub bass_series: Option<RationalSeries>,
    pub oracle: OracleInvariants,
    pub truncated_exterior: Option<bool>,
    /// `β_0, β_1, β_2` of the canonical module when it was computed.
    pub canonical_betti: Option<Vec<usize>>,
    pub audit: AuditRecord,
    pub notes: Vec<String>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl InvariantReport {
    /// JSON report. Timings are omitted when `with_timings` is false.
    pub fn to_json(&self, with_timings: bool) -> Value {
        let series = self.bass_series.as_ref().map(|s| json!({ "num": s.num, "den": s.den }));
        let mut v = json!({
            "ideal": self.ideal,
            "field": self.field.label(),
            "n": self.n,
            "m": self.m,
            "l": self.l,
            "betti": self.betti,
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "rhat": self.rhat,
            "generic": self.generic,
            "golod": self.golod,
            "class": self.cls.to_json(),
            "mu": self.mu,
            "bass_series": series,
            "oracle": { "p": self.oracle.p, "q": self.oracle.q, "r": self.oracle.r,
                        "homology_dims": [self.oracle.dims.0, self.oracle.dims.1, self.oracle.dims.2] },
            "truncated_exterior": self.truncated_exterior,
            "canonical_betti": self.canonical_betti,
            "audit": {
                "ires_pure_power": self.audit.ires_pure_power,
                "ires_mu1": self.audit.ires_mu1,
                "compclass_match": self.audit.compclass_match,
                "compclass_case": self.audit.compclass_case,
                "f3_entries_in_ideal": self.audit.f3_entries_in_ideal,
                "offending_entries": self.audit.offending_entries,
            },
            "notes": self.notes,
        });
        if with_timings {
            v["timings_ms"] = json!(self.timings_ms);
        }
        v
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ideal    {}", self.ideal)?;
        writeln!(f, "betti    {:?}", self.betti)?;
        writeln!(f, "n, m, l  {}, {}, {}", self.n, self.m, self.l)?;
        writeln!(f, "p, q, r  {}, {}, {}   (r̂ = {})", self.p, self.q, self.r, self.rhat)?;
        writeln!(f, "generic  {}", self.generic)?;
        writeln!(f, "golod    {}", self.golod)?;
        writeln!(f, "class    {}", self.cls)?;
        let mu: Vec<String> = self.mu.iter().map(|v| v.to_string()).collect();
        writeln!(f, "mu       {}", mu.join(", "))?;
        if let Some(s) = &self.bass_series {
            writeln!(f, "series   {s}")?;
        }
        for note in &self.notes {
            writeln!(f, "note     {note}")?;
        }
        Ok(())
    }
}

fn elapsed_ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Runs the whole pipeline over the configured field.
pub fn classify(ideal: &MonomialIdeal, cfg: &Config) -> Result<InvariantReport> {
    match cfg.field {
        FieldKind::Qq => classify_with::<Rational>(ideal, cfg),
        FieldKind::Gf32003 => classify_with::<Gf32003>(ideal, cfg),
    }
}

/// Intermediate objects of the pipeline, kept for callers that want to
/// print them.
pub struct Pipeline<F> {
    pub resolution: Resolution<F>,
    pub model: KoszulModel<F>,
    pub algebra: HomologyAlgebra<F>,
    pub report: InvariantReport,
}

pub fn classify_with<F: Field>(ideal: &MonomialIdeal, cfg: &Config) -> Result<InvariantReport> {
    run_pipeline::<F>(ideal, cfg).map(|p| p.report)
}

pub fn run_pipeline<F: Field>(ideal: &MonomialIdeal, cfg: &Config) -> Result<Pipeline<F>> {
    ideal.require_artinian()?;
    let mut timings = BTreeMap::new();
    let mut notes = Vec::new();

    let t = Instant::now();
    let res: Resolution<F> = resolve(ideal, cfg)?;
    timings.insert("resolution".to_string(), elapsed_ms(t));

    let t = Instant::now();
    let p = count_p_structural(&res, ideal);
    let bass = bass_mu0_mu1(&res, ideal, cfg.dim_cap)?;
    timings.insert("structural".to_string(), elapsed_ms(t));

    let t = Instant::now();
    let model: KoszulModel<F> = build_koszul_model(ideal, cfg.dim_cap)?;
    let alg = model.homology();
    let oracle = OracleInvariants {
        p: alg.rank_a1_squared(),
        q: alg.rank_a1_a2(),
        r: alg.rank_delta2(),
        dims: alg.dims(),
    };
    timings.insert("homology".to_string(), elapsed_ms(t));

    let (n, m) = (res.n(), res.m());
    let l = res.l();
    let generic = ideal.is_generic();
    let (q, r) = (oracle.q, oracle.r);

    let t = Instant::now();
    let mut truncated = None;
    let mut canonical_betti = None;
    let expected_dims = (n, m + n - 1, m);
    let cls = if ideal.is_complete_intersection() {
        notes.push("complete intersection".to_string());
        KoszulClass::C3
    } else if oracle.dims != expected_dims {
        KoszulClass::Unclassified(format!(
            "homology dimensions {:?} differ from the resolution ranks {:?}",
            oracle.dims, expected_dims
        ))
    } else if p != oracle.p || bass.rhat != oracle.r {
        KoszulClass::Unclassified(format!(
            "structural p = {p}, r̂ = {} but homology p = {}, r = {}",
            bass.rhat, oracle.p, oracle.r
        ))
    } else {
        match (p, q, r) {
            (3, 0, 0) => {
                let check = truncated_exterior_check(&model, &alg)?;
                truncated = Some(check);
                let cls = if check { KoszulClass::T } else { KoszulClass::H(3, 0) };
                if cfg.confirm_with_beta2 {
                    let betti = canonical_betti_from(&res, ideal, 2, cfg.dim_cap)?;
                    let e = betti[2] as i64 - betti[1] as i64 - l as i64 * betti[0] as i64;
                    canonical_betti = Some(betti);
                    let want = if check { -2 } else { -3 };
                    if e != want {
                        KoszulClass::Unclassified(format!(
                            "β2 - β1 - lβ0 = {e} contradicts {} (expected {want})",
                            cls.label()
                        ))
                    } else {
                        cls
                    }
                } else {
                    cls
                }
            }
            (1, 1, 2) => KoszulClass::B,
            (0, 1, r) if r >= 2 => {
                notes.push(format!("finding: (p,q,r) = (0,1,{r}) places R in G({r})"));
                KoszulClass::G(r)
            }
            (0, 0, 0) => KoszulClass::H(0, 0),
            (p, q, r) if q == r => {
                if (p, q, r) == (0, 1, 1) {
                    notes.push("(p,q,r) = (0,1,1) is labelled H(0,1) rather than G(1)".to_string());
                }
                KoszulClass::H(p, q)
            }
            (p, q, r) => KoszulClass::Unclassified(format!("(p,q,r) = ({p},{q},{r}) matches no class")),
        }
    };

    let bass_series = match &cls {
        KoszulClass::C3 | KoszulClass::Unclassified(_) => None,
        c => Some(bass_series(c, n, m)?),
    };
    let mut mu = vec![bass.mu0 as i64, bass.mu1 as i64];
    let mut cls = cls;
    if let Some(s) = &bass_series {
        let expanded = expand_series(s, SERIES_TERMS - 1);
        if expanded[..2] != mu[..] {
            cls = KoszulClass::Unclassified(format!(
                "series of {} starts {:?} but μ⁰, μ¹ = {:?}",
                cls.label(),
                &expanded[..2],
                mu
            ));
        } else {
            mu = expanded;
        }
    }
    let bass_series = if cls.is_classified() { bass_series } else { None };
    let audit = audit_conjectures(ideal, &res, bass.mu1, &cls);
    timings.insert("classify".to_string(), elapsed_ms(t));

    let report = InvariantReport {
        ideal: ideal.to_string(),
        field: field_kind::<F>(),
        n,
        m,
        l,
        betti: res.betti(),
        p,
        q,
        r,
        rhat: bass.rhat,
        mu0: bass.mu0,
        mu1: bass.mu1,
        generic,
        golod: cls == KoszulClass::H(0, 0),
        cls,
        mu,
        bass_series,
        oracle,
        truncated_exterior: truncated,
        canonical_betti,
        audit,
        notes,
        timings_ms: timings,
    };
    Ok(Pipeline { resolution: res, model, algebra: alg, report })
}

fn field_kind<F: Field>() -> FieldKind {
    if F::characteristic() == 0 {
        FieldKind::Qq
    } else {
        FieldKind::Gf32003
    }
}

/// Class of a generic ideal from the shape of its generators and the
/// resolution alone.
pub fn classify_generic(ideal: &MonomialIdeal, cfg: &Config) -> Result<KoszulClass> {
    if !ideal.is_generic() {
        return Err(Error::NonGeneric);
    }
    ideal.require_artinian()?;
    if ideal.is_complete_intersection() {
        return Ok(KoszulClass::C3);
    }
    let mixed: Vec<_> = ideal.mixed_generators().collect();
    if !mixed.is_empty() && mixed.iter().all(|g| g.support_size() == 3) {
        return Ok(KoszulClass::T);
    }
    let res: Resolution<Rational> = resolve(ideal, cfg)?;
    let p = count_p_structural(&res, ideal);
    if p == 0 {
        return Ok(KoszulClass::H(0, 0));
    }
    Ok(KoszulClass::H(p, dependent_row_count_generic(&res, ideal)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(s: &str) -> InvariantReport {
        classify(&s.parse().unwrap(), &Config::default()).unwrap()
    }

    #[test]
    fn labels_round_trip() {
        for c in [KoszulClass::C3, KoszulClass::T, KoszulClass::B, KoszulClass::G(3), KoszulClass::H(2, 1)] {
            assert_eq!(c.label().parse::<KoszulClass>().unwrap(), c);
        }
        assert!("H(1)".parse::<KoszulClass>().is_err());
    }

    #[test]
    fn example_three_one() {
        let r = report("x^3,x^2*y,y^3,z^3,x^2*z^2");
        assert_eq!(r.cls, KoszulClass::B);
        assert_eq!((r.p, r.q, r.r, r.rhat), (1, 1, 2, 2));
        assert_eq!(&r.mu[..2], &[2, 4]);
        assert!(r.audit.is_clean());
    }

    #[test]
    fn example_four_two() {
        let r = report("x^5,y^5,z^5,y^3*z^3,x*y^4*z^2,x*y^2*z^4");
        assert_eq!(r.cls, KoszulClass::H(3, 0));
        assert_eq!(r.truncated_exterior, Some(false));
        assert!(r.generic);
    }

    #[test]
    fn complete_intersection() {
        let r = report("x^2,y^2,z^2");
        assert_eq!(r.cls, KoszulClass::C3);
        assert_eq!(r.mu, vec![1, 0]);
        assert!(r.bass_series.is_none());
    }

    #[test]
    fn golod_flag() {
        let r = report("x^2,x*y,x*z,y^2,y*z,z^2");
        assert_eq!(r.cls, KoszulClass::H(0, 0));
        assert!(r.golod);
        assert_eq!(&r.mu[..2], &[3, 8]);
    }

    #[test]
    fn beta2_confirmation() {
        let cfg = Config { confirm_with_beta2: true, ..Config::default() };
        let r = classify(&"x^3,y^3,z^3,x*y*z".parse().unwrap(), &cfg).unwrap();
        assert_eq!(r.cls, KoszulClass::T);
        assert_eq!(r.canonical_betti.as_ref().map(|b| b.len()), Some(3));
    }

    #[test]
    fn generic_shortcut() {
        let cfg = Config::default();
        let g = |s: &str| classify_generic(&s.parse().unwrap(), &cfg).unwrap();
        assert_eq!(g("x^3,y^3,z^3,x*y*z"), KoszulClass::T);
        assert_eq!(g("x^5,y^5,z^5,y^3*z^3,x*y^4*z^2,x*y^2*z^4"), KoszulClass::H(3, 0));
        assert!(classify_generic(&"x^3,x^2*y,y^3,z^3,x^2*z^2".parse().unwrap(), &cfg).is_err());
    }
}
