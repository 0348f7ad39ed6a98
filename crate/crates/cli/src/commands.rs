use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use vieta_core::conic::{self, chain, classify, descend, imo_certify, recurrence_seq, Conic, DescentCertificate};
use vieta_core::oracle::{self, box_search, imo_scan, norm_scan, verify_final_prop, ScanReport, Workers};
use vieta_core::pell::{act, rd_fundamental, regen_table1, VietaForm};
use vieta_core::qfield::{
    davenport_min_norms, rd_delta, rd_unit, reduce_by_unit, reduce_nsq_plus2, small_norm_classify, theorem_threshold,
    NormConstraint, QuadElt, RdFamily, RdKind, ReductionResult,
};
use vieta_core::rational_param::{pell_point_from_t, point_from_t, t_from_point, RatPoint, SlopeParam};
use vieta_core::{Error, IntPoint};

use crate::args::{Command, ScanTarget};
use crate::record::OutputRecord;

/// Failure of a command, mapped to the process exit code.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Invariant(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_invariant_violation() {
            CliError::Invariant(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

type Out = Result<OutputRecord, CliError>;

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn pt(p: &IntPoint) -> Value {
    json!({ "x": p.x.to_string(), "y": p.y.to_string() })
}

fn rat_pt(p: &RatPoint) -> Value {
    json!({ "x": p.x.to_string(), "y": p.y.to_string() })
}

fn quad(a: &QuadElt) -> Value {
    json!({
        "u": a.u().to_string(),
        "v": a.v().to_string(),
        "m": a.m().to_string(),
        "d": a.d().to_string(),
        "value": a.to_string(),
        "norm": a.norm().to_string(),
    })
}

fn certificate(c: &DescentCertificate) -> Value {
    let steps: Vec<Value> = c.steps.iter().map(|(tag, p)| json!({ "op": tag.name(), "point": pt(p) })).collect();
    json!({
        "p": c.conic.p().to_string(),
        "q": c.conic.q().to_string(),
        "start": pt(&c.start),
        "steps": steps,
        "terminal": pt(&c.terminal),
        "kind": c.kind.name(),
        "square_root": c.square_root().map(|r| r.to_string()),
    })
}

fn scan_value<H>(r: &ScanReport<H>, item: impl Fn(&H) -> Value) -> Value {
    let parameters: serde_json::Map<String, Value> =
        r.parameters.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
    json!({
        "parameters": parameters,
        "hit_count": r.hits.len().to_string(),
        "hits": r.hits.iter().map(&item).collect::<Vec<_>>(),
        "counterexamples": r.counterexamples.iter().map(&item).collect::<Vec<_>>(),
        "exhaustiveness": r.exhaustiveness,
    })
}

fn family(name: &str, n: u64) -> Result<RdFamily, CliError> {
    let kind = RdKind::parse(name)
        .ok_or_else(|| CliError::Input(format!("unknown family {name:?}; use NsqMinus1, NsqMinus4 or NsqPlus2")))?;
    Ok(RdFamily::new(kind, n)?)
}

fn parse_slope(t: &str) -> Result<SlopeParam, CliError> {
    match t.trim().to_ascii_lowercase().as_str() {
        "inf" | "infinity" | "oo" => Ok(SlopeParam::Infinity),
        s => {
            let (num, den) = s.split_once('/').unwrap_or((s, "1"));
            let parse = |x: &str| BigInt::from_str(x.trim()).map_err(|_| CliError::Input(format!("bad slope {t:?}")));
            let (num, den) = (parse(num)?, parse(den)?);
            if den == BigInt::from(0) {
                return Err(CliError::Input("slope denominator is zero; use inf".into()));
            }
            Ok(SlopeParam::Finite(BigRational::new(num, den)))
        }
    }
}

fn unit_for(m: &BigInt) -> Result<(QuadElt, String), CliError> {
    if let Some(f) = RdFamily::from_radicand(m) {
        return Ok((rd_unit(&f), format!("{} n={}", f.kind().name(), f.n())));
    }
    let small: u64 = m
        .try_into()
        .map_err(|_| CliError::Input(format!("radicand {m} has no closed-form unit and is too large to search")))?;
    let (t, u) = oracle::pell_fundamental(small)?;
    Ok((QuadElt::new(t, u, m.clone(), 1)?, "pell-search".into()))
}

fn reduction(r: &ReductionResult) -> Value {
    let (a_ok, b_ok) = r.bounds_hold();
    json!({
        "input": quad(&r.input),
        "unit": quad(&r.unit),
        "exponent": r.exponent.to_string(),
        "delta": r.delta.as_ref().map(quad),
        "reduced": quad(&r.reduced),
        "nu": r.nu.to_string(),
        "formula": r.formula.name(),
        "bound_a_holds": a_ok,
        "bound_b_holds": b_ok,
    })
}

fn constraint(c: &NormConstraint) -> Value {
    match c {
        NormConstraint::ForcedExceptional { exceptional, twice_square_allowed } => json!({
            "shape": c.name(),
            "exceptional": exceptional.to_string(),
            "twice_square_allowed": twice_square_allowed,
        }),
        _ => json!({ "shape": c.name() }),
    }
}

pub fn execute(cmd: &Command, workers: Workers) -> Out {
    match cmd {
        Command::Classify { p, q } => {
            let v = classify(p, q);
            Ok(OutputRecord::new(
                "classify",
                params([("p", p.to_string()), ("q", q.to_string())]),
                json!({
                    "verdict": v.tag.name(),
                    "theorem_id": v.theorem_id,
                    "witnesses": v.witnesses.iter().map(pt).collect::<Vec<_>>(),
                    "notes": v.notes,
                }),
                vec![],
            ))
        }
        Command::Descend { p, q, x, y } => {
            let c = Conic::new(p.clone(), q.clone())?;
            let cert = descend(&c, &IntPoint { x: x.clone(), y: y.clone() })?;
            cert.replay().map_err(|e| CliError::Invariant(e.to_string()))?;
            Ok(OutputRecord::new(
                "descend",
                params([("p", p.to_string()), ("q", q.to_string()), ("x", x.to_string()), ("y", y.to_string())]),
                certificate(&cert),
                vec![],
            ))
        }
        Command::Chain { p, q, x, y, back, fwd } => {
            let c = Conic::new(p.clone(), q.clone())?;
            let points = chain(&c, &IntPoint { x: x.clone(), y: y.clone() }, *back, *fwd)?;
            Ok(OutputRecord::new(
                "chain",
                params([
                    ("p", p.to_string()),
                    ("q", q.to_string()),
                    ("x", x.to_string()),
                    ("y", y.to_string()),
                    ("back", back.to_string()),
                    ("fwd", fwd.to_string()),
                ]),
                json!({ "points": points.iter().map(pt).collect::<Vec<_>>() }),
                vec![],
            ))
        }
        Command::Imo { a, b } => {
            let cert = imo_certify(a, b)?;
            cert.certificate.replay().map_err(|e| CliError::Invariant(e.to_string()))?;
            Ok(OutputRecord::new(
                "imo",
                params([("a", a.to_string()), ("b", b.to_string())]),
                json!({
                    "k": cert.k.to_string(),
                    "root": cert.root.to_string(),
                    "certificate": certificate(&cert.certificate),
                }),
                vec![],
            ))
        }
        Command::Param { m, t, pell } => {
            let slope = parse_slope(t)?;
            if *pell {
                let SlopeParam::Finite(tr) = &slope else {
                    return Err(CliError::Input("the Pell parametrization needs a finite slope".into()));
                };
                let point = pell_point_from_t(tr);
                return Ok(OutputRecord::new(
                    "param",
                    params([("conic", "x^2 - 2xy - y^2 = 1".into()), ("t", slope.to_string())]),
                    json!({ "point": rat_pt(&point) }),
                    vec![],
                ));
            }
            let m = m.as_ref().ok_or_else(|| CliError::Input("-m is required".into()))?;
            let point = point_from_t(m, &slope)?;
            let back = t_from_point(m, &point).map_err(|e| CliError::Invariant(e.to_string()))?;
            if back != slope {
                return Err(CliError::Invariant(format!("slope {slope} came back as {back}")));
            }
            Ok(OutputRecord::new(
                "param",
                params([("m", m.to_string()), ("t", slope.to_string())]),
                json!({ "point": rat_pt(&point), "t_from_point": back.to_string() }),
                vec![],
            ))
        }
        Command::PellAct { k, x, y, j } => {
            let start = IntPoint { x: x.clone(), y: y.clone() };
            let image = act(k, &start, *j)?;
            if act(k, &image, -*j)? != start {
                return Err(CliError::Invariant("inverse action did not return the start".into()));
            }
            Ok(OutputRecord::new(
                "pell-act",
                params([("k", k.to_string()), ("x", x.to_string()), ("y", y.to_string()), ("j", j.to_string())]),
                json!({ "point": pt(&image) }),
                vec![],
            ))
        }
        Command::Reduce { m, u, v, d, fourth_root } => {
            let xi = QuadElt::new(u.clone(), v.clone(), m.clone(), *d)?;
            let (r, source) = if *fourth_root {
                let f = RdFamily::from_radicand(m)
                    .filter(|f| f.kind() == RdKind::NsqPlus2)
                    .ok_or_else(|| CliError::Input(format!("--fourth-root needs m = n^2 + 2, got {m}")))?;
                (reduce_nsq_plus2(&xi, f.n())?, format!("NsqPlus2 n={}", f.n()))
            } else {
                let (eps, source) = unit_for(m)?;
                (reduce_by_unit(&xi, &eps)?, source)
            };
            r.verify().map_err(|e| CliError::Invariant(e.to_string()))?;
            let mut value = reduction(&r);
            value["unit_source"] = Value::String(source);
            Ok(OutputRecord::new(
                "reduce",
                params([
                    ("m", m.to_string()),
                    ("u", u.to_string()),
                    ("v", v.to_string()),
                    ("d", d.to_string()),
                    ("fourth_root", fourth_root.to_string()),
                ]),
                value,
                vec![],
            ))
        }
        Command::NormClassify { family: name, n, nu } => {
            let f = family(name, *n)?;
            let c = small_norm_classify(&f, *nu)?;
            let mut value = constraint(&c);
            value["m"] = Value::String(f.radicand().to_string());
            value["threshold"] = Value::String(theorem_threshold(&f).to_string());
            value["nu_admitted"] = Value::Bool(c.admits(*nu));
            Ok(OutputRecord::new(
                "norm-classify",
                params([("family", f.kind().name().into()), ("n", n.to_string()), ("nu", nu.to_string())]),
                value,
                vec![],
            ))
        }
        Command::Scan { target } => scan(target, workers),
        Command::Table1 => {
            let rows = regen_table1();
            let errata: Vec<String> = rows
                .iter()
                .filter_map(|r| r.erratum.as_ref().map(|e| format!("k={} sign={}: {e}", r.exponent, r.sign)))
                .collect();
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.exponent.to_string(),
                        "sign": r.sign.to_string(),
                        "unit": r.unit.to_string(),
                        "point": pt(&r.point),
                        "on_conic": r.on_conic,
                        "printed": pt(&r.printed),
                        "printed_on_conic": r.printed_on_conic,
                    })
                })
                .collect();
            Ok(OutputRecord::new("table1", BTreeMap::new(), json!({ "rows": rows }), errata))
        }
        Command::Davenport { t } => {
            let b = davenport_min_norms(*t)?;
            Ok(OutputRecord::new(
                "davenport",
                params([("t", t.to_string())]),
                json!({
                    "m": (BigInt::from(*t) * BigInt::from(*t) - BigInt::from(1)).to_string(),
                    "plus": { "nu": b.plus.0.to_string(), "witness": pt(&b.plus.1) },
                    "minus": { "nu": b.minus.0.to_string(), "witness": pt(&b.minus.1) },
                }),
                vec![],
            ))
        }
        Command::Recurrence { m, count } => {
            let terms = recurrence_seq(m, *count);
            Ok(OutputRecord::new(
                "recurrence",
                params([("m", m.to_string()), ("count", count.to_string())]),
                json!({ "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>() }),
                vec![],
            ))
        }
        Command::VietaForm { m } => {
            let f = VietaForm::new(*m, 1)?;
            let (t, u) = match RdFamily::from_radicand(&BigInt::from(*m)) {
                Some(fam) => {
                    let p = rd_fundamental(&fam);
                    (p.x, p.y)
                }
                None => oracle::pell_fundamental(*m)?,
            };
            let pell = IntPoint { x: t, y: u };
            let pulled = f.from_pell(&pell)?;
            Ok(OutputRecord::new(
                "vieta-form",
                params([("m", m.to_string())]),
                json!({
                    "shear": f.shear().to_string(),
                    "coefficients": f.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "pell_solution": pt(&pell),
                    "form_solution": pt(&pulled),
                }),
                vec![],
            ))
        }
        Command::Unit { family: name, n } => {
            let f = family(name, *n)?;
            let delta = match f.kind() {
                RdKind::NsqPlus2 => Some(quad(&rd_delta(*n)?)),
                _ => None,
            };
            Ok(OutputRecord::new(
                "unit",
                params([("family", f.kind().name().into()), ("n", n.to_string())]),
                json!({
                    "m": f.radicand().to_string(),
                    "unit": quad(&rd_unit(&f)),
                    "pell_solution": pt(&rd_fundamental(&f)),
                    "delta": delta,
                }),
                vec![],
            ))
        }
    }
}

fn scan(target: &ScanTarget, workers: Workers) -> Out {
    match target {
        ScanTarget::Box { p, q, bound } => {
            let c = Conic::new(p.clone(), q.clone())?;
            let r = box_search(&c, *bound, workers)?;
            if let Some(bad) = r.hits.iter().find(|h| !conic::contains(&c, h)) {
                return Err(CliError::Invariant(format!("box hit {bad} is off the conic")));
            }
            Ok(OutputRecord::new(
                "scan box",
                params([("p", p.to_string()), ("q", q.to_string()), ("bound", bound.to_string())]),
                scan_value(&r, pt),
                vec![],
            ))
        }
        ScanTarget::Imo { bound } => {
            let r = imo_scan(*bound, workers)?;
            Ok(OutputRecord::new(
                "scan imo",
                params([("bound", bound.to_string())]),
                scan_value(&r, |h| json!({ "a": h.x.to_string(), "b": h.y.to_string(), "k": h.k.to_string() })),
                vec![],
            ))
        }
        ScanTarget::Norm { m, bound } => {
            let r = norm_scan(*m, *bound, workers)?;
            Ok(OutputRecord::new(
                "scan norm",
                params([("m", m.to_string()), ("bound", bound.to_string())]),
                scan_value(&r, |e| {
                    json!({
                        "nu": e.nu.to_string(),
                        "plus": e.plus.as_ref().map(pt),
                        "minus": e.minus.as_ref().map(pt),
                    })
                }),
                vec![],
            ))
        }
        ScanTarget::FinalProp { bound } => {
            let r = verify_final_prop(*bound, workers)?;
            Ok(OutputRecord::new(
                "scan final-prop",
                params([("bound", bound.to_string())]),
                scan_value(&r, |h| json!({ "x": h.x.to_string(), "y": h.y.to_string(), "k": h.k.to_string() })),
                vec![],
            ))
        }
    }
}
