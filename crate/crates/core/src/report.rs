//! Machine-readable reports (serde) and their aligned text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bundle::{
    pairing_label, three_planes_locus, Check, Convention, DiagonalBundle, Fiber, FiberType,
    Minimality, Over, PairingTrial, SbVerdict, LABELS,
};
use crate::error::{Error, Result};
use crate::field::CubeClass;
use crate::hnr::{symbol_witness, HnrOutcome, LocalTest, Verdict};
use crate::symbol::{reciprocity_check, residue_detailed, Symbol2};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: String,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<Vec<Check>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibers: Option<Vec<FiberRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimality: Option<MinimalityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol: Option<SymbolReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hnr: Option<HnrReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// How each section was obtained.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub provenance: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleReport {
    pub variables: Vec<String>,
    pub coefficients: BTreeMap<String, String>,
    pub convention: Convention,
    pub checks: Vec<Check>,
}

/// A class in `k(C)*/cubes` as its divisor mod 3 on the parameter line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub carrier: String,
    pub parametrization: String,
    /// `(polynomial in s or "inf", order)`.
    pub divisor: Vec<(String, u8)>,
    /// `(rational point, order)`.
    pub points: Vec<(String, u8)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRow {
    pub curve: String,
    pub valuations: [i64; 4],
    pub units: Vec<String>,
    pub fiber: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<ClassReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingRow {
    pub pairing: String,
    pub cube: bool,
    pub non_split: bool,
    pub symbol: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub verdict: String,
    /// Labeling `(i, j, k, l)` of the normal form, when one decided.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<String>,
    /// `(name, element, is a cube)`.
    pub elements: Vec<(String, String, bool)>,
    pub global_pairings: Vec<PairingRow>,
    pub labelings_tried: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueRow {
    pub curve: String,
    pub v_g: i64,
    pub v_h: i64,
    pub sign: i8,
    pub trivial: bool,
    pub class: ClassReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRow {
    pub point: String,
    /// `(curve, residue order)`.
    pub contributions: Vec<(String, u8)>,
    pub sum: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolReport {
    pub symbol: String,
    pub residues: Vec<ResidueRow>,
    pub ramification: Vec<String>,
    pub points: Vec<PointRow>,
    pub irrational: Vec<String>,
    pub reciprocity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalRow {
    pub site: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blockers: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorRow {
    pub vector: Vec<i8>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blockers: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub components: Vec<String>,
    pub order: u64,
    pub proven: Vec<Vec<i8>>,
    pub undecided: Vec<Vec<i8>>,
    pub generators: Vec<Vec<i8>>,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub conclusion: String,
    pub hypotheses: Vec<Check>,
    pub provenance: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnrReport {
    pub locus: Vec<(String, ClassReport)>,
    pub condition_i: Vec<LocalRow>,
    pub point_tests: Vec<LocalRow>,
    pub vectors: Vec<VectorRow>,
    pub group: GroupReport,
    /// `(member, symbol with exactly its ramification)`.
    pub witnesses: Vec<(Vec<i8>, Option<String>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            status: "ok".into(),
            ..Default::default()
        }
    }

    pub fn fail(&mut self, e: &Error) {
        self.exit_code = e.exit_code();
        self.status = status_name(self.exit_code).into();
        self.error = Some(e.to_string());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Manifest(e.to_string()))
    }
}

pub fn status_name(code: i32) -> &'static str {
    match code {
        0 => "ok",
        1 => "hypothesis-violation",
        2 => "unsupported",
        4 => "golden-mismatch",
        _ => "input-error",
    }
}

pub fn class_report(c: &CubeClass, vars: &[&str]) -> Result<ClassReport> {
    let carrier = c.carrier();
    let mut divisor: Vec<(String, u8)> = c
        .finite_part()
        .into_iter()
        .map(|(p, m)| (p.to_string_in("s"), m))
        .collect();
    if c.infinity_exponent() != 0 {
        divisor.push(("inf".into(), c.infinity_exponent()));
    }
    let (pts, _) = c.rational_support()?;
    Ok(ClassReport {
        carrier: carrier.to_string_with(vars),
        parametrization: carrier.require_param()?.describe(),
        divisor,
        points: pts.into_iter().map(|(p, m)| (p.to_string(), m)).collect(),
    })
}

pub fn bundle_report(b: &DiagonalBundle, vars: &[&str], conv: Convention) -> BundleReport {
    BundleReport {
        variables: vars.iter().map(|v| v.to_string()).collect(),
        coefficients: LABELS
            .iter()
            .zip(b.coeffs())
            .map(|(l, c)| (l.to_string(), c.to_string_with(vars)))
            .collect(),
        convention: conv,
        checks: b.validate(),
    }
}

fn fiber_row(f: &Fiber, vars: &[&str], conv: Convention) -> Result<FiberRow> {
    let (gamma, gamma_of) = match &f.kind {
        FiberType::ThreePlanes(g) => {
            let (e, l) = (LABELS[f.units[0]], LABELS[f.units[1]]);
            let of = match conv {
                Convention::LaterOverEarlier => format!("{l}/{e}"),
                Convention::EarlierOverLater => format!("{e}/{l}"),
            };
            (Some(class_report(g, vars)?), Some(of))
        }
        _ => (None, None),
    };
    Ok(FiberRow {
        curve: f.curve.to_string_with(vars),
        valuations: f.valuations,
        units: f.units.iter().map(|&i| LABELS[i].to_string()).collect(),
        fiber: f.kind.name().to_string(),
        gamma_of,
        gamma,
    })
}

pub fn fibers_report(b: &DiagonalBundle, vars: &[&str], conv: Convention) -> Result<Vec<FiberRow>> {
    three_planes_locus(b, conv)?
        .components
        .iter()
        .map(|f| fiber_row(f, vars, conv))
        .collect()
}

fn pairing_row(t: &PairingTrial, vars: &[&str]) -> PairingRow {
    PairingRow {
        pairing: pairing_label(&t.pairing),
        cube: t.cube,
        non_split: t.non_split,
        symbol: t.symbol.to_string_with(vars),
    }
}

pub fn minimality_report(
    b: &DiagonalBundle,
    m: &Minimality,
    vars: &[&str],
) -> Result<MinimalityReport> {
    let global = match crate::bundle::sb_normal_form_over(b, &Over::Global)? {
        SbVerdict::Yes(t) => vec![t],
        SbVerdict::NoEvidence(ts) => ts,
    };
    let (labeling, elements, tried) = match m {
        Minimality::Minimal(lab) => (Some(lab), lab.elements.clone(), 0),
        Minimality::SbBirational(_) => (None, Vec::new(), 0),
        Minimality::Unknown(labs) => (None, Vec::new(), labs.len()),
    };
    let tried = if let Some(lab) = labeling {
        crate::bundle::segre_labelings()
            .iter()
            .position(|o| *o == lab.order)
            .map_or(0, |i| i + 1)
    } else {
        tried
    };
    Ok(MinimalityReport {
        verdict: m.name().to_string(),
        labeling: labeling.map(|lab| {
            let names: Vec<&str> = lab.order.iter().map(|&i| LABELS[i]).collect();
            format!("({})", names.join(","))
        }),
        elements: elements
            .into_iter()
            .map(|(n, e, c)| (n, e.reduce_cubes().to_string_with(vars), c))
            .collect(),
        global_pairings: global.iter().map(|t| pairing_row(t, vars)).collect(),
        labelings_tried: tried,
    })
}

pub fn symbol_report(s: &Symbol2, vars: &[&str]) -> Result<SymbolReport> {
    let mut residues = Vec::new();
    for c in s.support() {
        let r = residue_detailed(s, &c)?;
        residues.push(ResidueRow {
            curve: c.to_string_with(vars),
            v_g: r.v_g,
            v_h: r.v_h,
            sign: r.sign,
            trivial: r.class.is_trivial(),
            class: class_report(&r.class, vars)?,
        });
    }
    let rec = reciprocity_check(s)?;
    let names: Vec<String> = rec
        .ramification
        .iter()
        .map(|(c, _)| c.to_string_with(vars))
        .collect();
    let points = rec
        .ledger
        .points
        .iter()
        .map(|(p, contrib)| PointRow {
            point: p.to_string(),
            contributions: contrib
                .iter()
                .map(|(k, m)| (names[*k].clone(), *m))
                .collect(),
            sum: rec.ledger.sum_at(p),
        })
        .collect();
    Ok(SymbolReport {
        symbol: s.to_string_with(vars),
        residues,
        irrational: rec
            .ledger
            .lonely
            .iter()
            .map(|(k, poly, m)| {
                format!(
                    "{} = 0 on {} with order {m}",
                    poly.to_string_in("s"),
                    names[*k]
                )
            })
            .collect(),
        reciprocity: rec.holds(),
        ramification: names,
        points,
    })
}

fn site_name(o: &Over, vars: &[&str]) -> String {
    match o {
        Over::Global => "K".into(),
        Over::Curve(c) => format!("K_({})", c.to_string_with(vars)),
        Over::Point(p) => format!("K_{p}"),
    }
}

fn blockers(v: &Verdict) -> Vec<String> {
    match v {
        Verdict::Unknown(b) => b.clone(),
        Verdict::No(w) => vec![w.clone()],
        Verdict::Yes => Vec::new(),
    }
}

fn local_row(t: &LocalTest, vars: &[&str]) -> LocalRow {
    let symbol = match &t.sb {
        Some(SbVerdict::Yes(tr)) => Some(tr.symbol.to_string_with(vars)),
        _ => None,
    };
    LocalRow {
        site: site_name(&t.site, vars),
        verdict: t.verdict.name().to_string(),
        pairing: t.pairing(),
        symbol,
        blockers: blockers(&t.verdict),
    }
}

/// Witness symbols are searched for the nonzero proven members when there
/// are at most this many, and for the generators otherwise.
const WITNESS_MEMBERS: usize = 8;

pub fn hnr_report(b: &DiagonalBundle, out: &HnrOutcome, vars: &[&str]) -> Result<HnrReport> {
    let g = &out.group;
    let locus = out
        .locus
        .three_planes
        .iter()
        .map(|(c, gamma)| Ok((c.to_string_with(vars), class_report(gamma, vars)?)))
        .collect::<Result<Vec<_>>>()?;
    let nonzero: Vec<&Vec<i8>> = g
        .proven
        .iter()
        .filter(|v| v.iter().any(|x| *x != 0))
        .collect();
    let targets: Vec<&Vec<i8>> = if nonzero.len() <= WITNESS_MEMBERS {
        nonzero
    } else {
        g.generators.iter().collect()
    };
    let witnesses = targets
        .into_iter()
        .map(|v| {
            (
                v.clone(),
                symbol_witness(b, &out.locus, v).map(|s| s.to_string_with(vars)),
            )
        })
        .collect();
    Ok(HnrReport {
        locus,
        condition_i: out.condition_i.iter().map(|t| local_row(t, vars)).collect(),
        point_tests: out.point_tests.iter().map(|t| local_row(t, vars)).collect(),
        vectors: g
            .verdicts
            .iter()
            .map(|(v, verdict)| VectorRow {
                vector: v.clone(),
                verdict: verdict.name().to_string(),
                witness: match verdict {
                    Verdict::No(w) => Some(w.clone()),
                    _ => None,
                },
                blockers: match verdict {
                    Verdict::Unknown(b) => b.clone(),
                    _ => Vec::new(),
                },
            })
            .collect(),
        group: GroupReport {
            components: g
                .components
                .iter()
                .map(|c| c.to_string_with(vars))
                .collect(),
            order: g.order,
            proven: g.proven.clone(),
            undecided: g.undecided.clone(),
            generators: g.generators.clone(),
            closed: g.is_closed(),
        },
        witnesses,
        certificate: out.certificate.as_ref().map(|c| CertificateReport {
            conclusion: c.conclusion.clone(),
            hypotheses: c.hypotheses.clone(),
            provenance: c.provenance.clone(),
        }),
    })
}

fn fmt_vec(v: &[i8]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fmt_class(c: &ClassReport) -> String {
    if c.divisor.is_empty() {
        return "trivial".into();
    }
    let parts: Vec<String> = c.points.iter().map(|(p, m)| format!("{m}{p}")).collect();
    let div: Vec<String> = c
        .divisor
        .iter()
        .map(|(p, m)| format!("{m}*({p})"))
        .collect();
    if parts.is_empty() {
        div.join(" + ")
    } else {
        format!("{} ; points {}", div.join(" + "), parts.join(" + "))
    }
}

fn check_lines(out: &mut String, checks: &[Check]) {
    let w = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in checks {
        let mark = if c.pass { "pass" } else { "FAIL" };
        let _ = writeln!(out, "  {:<w$}  {mark}  {}", c.name, c.detail);
    }
}

/// Aligned text for terminals.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    if let Some(b) = &r.bundle {
        let _ = writeln!(out, "bundle");
        for (k, v) in &b.coefficients {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let _ = writeln!(out, "  convention: {}", b.convention.name());
        check_lines(&mut out, &b.checks);
    }
    if let Some(h) = &r.hypotheses {
        let _ = writeln!(out, "hypotheses");
        check_lines(&mut out, h);
    }
    if let Some(rows) = &r.fibers {
        let _ = writeln!(out, "fibers");
        let w = rows
            .iter()
            .map(|f| f.curve.len())
            .max()
            .unwrap_or(0)
            .min(12);
        for f in rows {
            let v: Vec<String> = f.valuations.iter().map(|x| x.to_string()).collect();
            let mut line = format!("  {:<w$}  v=({})  {:<13}", f.curve, v.join(","), f.fiber);
            if let (Some(g), Some(of)) = (&f.gamma, &f.gamma_of) {
                let _ = write!(line, "  gamma = {of}: {}", fmt_class(g));
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
    }
    if let Some(m) = &r.minimality {
        let _ = writeln!(out, "minimality: {}", m.verdict);
        if let Some(l) = &m.labeling {
            let _ = writeln!(out, "  labeling {l}");
        }
        for (n, e, c) in &m.elements {
            let _ = writeln!(
                out,
                "  {n:<2} = {e:<40} {}",
                if *c { "cube" } else { "not a cube" }
            );
        }
        for p in &m.global_pairings {
            let _ = writeln!(
                out,
                "  pairing {}  cube ratio: {}  non-split: {}",
                p.pairing, p.cube, p.non_split
            );
        }
    }
    if let Some(s) = &r.symbol {
        let _ = writeln!(out, "symbol {}", s.symbol);
        let w = s
            .residues
            .iter()
            .map(|x| x.curve.len())
            .max()
            .unwrap_or(0)
            .min(12);
        for x in &s.residues {
            let _ = writeln!(
                out,
                "  residue along {:<w$}  v=({},{})  {}",
                x.curve,
                x.v_g,
                x.v_h,
                fmt_class(&x.class)
            );
        }
        for p in &s.points {
            let c: Vec<String> = p
                .contributions
                .iter()
                .map(|(n, m)| format!("{n}:{m}"))
                .collect();
            let _ = writeln!(
                out,
                "  point {:<12} sum {}  [{}]",
                p.point,
                p.sum,
                c.join(" ")
            );
        }
        for i in &s.irrational {
            let _ = writeln!(out, "  irrational support {i}");
        }
        let _ = writeln!(
            out,
            "  reciprocity: {}",
            if s.reciprocity { "holds" } else { "FAILS" }
        );
    }
    if let Some(h) = &r.hnr {
        let _ = writeln!(out, "three-planes locus");
        for (i, (c, g)) in h.locus.iter().enumerate() {
            let _ = writeln!(out, "  C{} = {c}  gamma: {}", i + 1, fmt_class(g));
        }
        for t in h.condition_i.iter().chain(&h.point_tests) {
            let _ = write!(out, "  Severi-Brauer over {:<12} {}", t.site, t.verdict);
            if let (Some(p), Some(s)) = (&t.pairing, &t.symbol) {
                let _ = write!(out, "  pairing {p}  symbol {s}");
            }
            out.push('\n');
            for b in &t.blockers {
                let _ = writeln!(out, "    {b}");
            }
        }
        let g = &h.group;
        let _ = writeln!(out, "group of order {}", g.order);
        let m: Vec<String> = g.proven.iter().map(|v| fmt_vec(v)).collect();
        let _ = writeln!(out, "  members:    {}", m.join(" "));
        let gens: Vec<String> = g.generators.iter().map(|v| fmt_vec(v)).collect();
        let _ = writeln!(out, "  generators: {}", gens.join(" "));
        if !g.undecided.is_empty() {
            let u: Vec<String> = g.undecided.iter().map(|v| fmt_vec(v)).collect();
            let _ = writeln!(out, "  undecided:  {}", u.join(" "));
        }
        for (v, s) in &h.witnesses {
            let _ = writeln!(
                out,
                "  witness {}: {}",
                fmt_vec(v),
                s.as_deref().unwrap_or("none found")
            );
        }
        if let Some(c) = &h.certificate {
            let _ = writeln!(out, "certificate");
            let _ = writeln!(out, "  {}", c.conclusion);
        }
    }
    if let Some(e) = &r.error {
        let _ = writeln!(out, "error ({}): {e}", r.status);
    }
    out
}
