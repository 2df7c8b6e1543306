//! Labeling documents (JSON), ASCII and DOT renderings, and the text
//! produced by each command-line subcommand.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::construct::{optimal_labeling, rn_ordering};
use crate::error::{Error, Result};
use crate::formulas::{
    max_dx_formula, rn_formula, rn_lower_bound, rn_upper_bound_trivial, t_plus_formula,
};
use crate::grid::{normalize_orientation, GridGraph, ParityCase, Vertex};
use crate::labeling::{span, step_report, validate, Labeling};
use crate::oracle::{oracle_rn, oracle_t_plus, OracleLimits, OracleResult};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub x: usize,
    pub y: usize,
    pub label: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentMeta {
    pub parity_case: Option<ParityCase>,
    pub formula_rn: Option<u64>,
    pub formula_t_plus: Option<u64>,
    pub tool_version: String,
}

/// The JSON interchange format for a labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDocument {
    pub a: usize,
    pub b: usize,
    /// Row-major, `(1,1)` first.
    pub labels: Vec<LabelEntry>,
    pub span: u64,
    pub meta: DocumentMeta,
}

impl LabelingDocument {
    pub fn from_labeling(f: &Labeling) -> Self {
        let g = f.grid();
        let (a, b) = (g.a(), g.b());
        let parity_case = normalize_orientation(a, b)
            .ok()
            .map(|(n, _)| n.parity_case());
        LabelingDocument {
            a,
            b,
            labels: f
                .iter()
                .map(|(v, label)| LabelEntry {
                    x: v.x,
                    y: v.y,
                    label,
                })
                .collect(),
            span: span(f),
            meta: DocumentMeta {
                parity_case,
                formula_rn: rn_formula(a, b).ok(),
                formula_t_plus: t_plus_formula(a, b).ok(),
                tool_version: TOOL_VERSION.to_string(),
            },
        }
    }

    /// Checks the entries against the declared dimensions.
    pub fn to_labeling(&self) -> Result<Labeling> {
        let g = GridGraph::new(self.a, self.b)?;
        Labeling::from_pairs(
            g,
            self.labels.iter().map(|e| (Vertex::new(e.x, e.y), e.label)),
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("not a labeling document: {e}")))
    }
}

/// The labels as a table with `y = b` on top, so `(1,1)` sits bottom-left.
pub fn render_ascii(f: &Labeling) -> String {
    let g = f.grid();
    let labels = f.as_slice();
    let width = labels
        .iter()
        .map(|l| l.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = format!("# {g} span={}\n", span(f));
    for y in (1..=g.b()).rev() {
        let row: Vec<String> = (1..=g.a())
            .map(|x| format!("{:>width$}", labels[g.index(Vertex::new(x, y))]))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Reads back the output of [`render_ascii`]. Lines starting with `#` are
/// ignored.
pub fn parse_ascii(text: &str) -> Result<Labeling> {
    let rows: Vec<Vec<u64>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|e| Error::Input(format!("bad label {t:?}: {e}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let b = rows.len();
    let a = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != a) {
        return Err(Error::Input("ragged label table".into()));
    }
    let g = GridGraph::new(a, b)?;
    let pairs = rows.iter().enumerate().flat_map(|(r, row)| {
        row.iter()
            .enumerate()
            .map(move |(c, &l)| (Vertex::new(c + 1, b - r), l))
    });
    Labeling::from_pairs(g, pairs)
}

/// Graphviz rendering with grid positions; use `neato -n` to keep them.
pub fn render_dot(f: &Labeling) -> String {
    let g = f.grid();
    let mut out = format!(
        "graph grid_{}_{} {{\n  node [shape=circle];\n",
        g.a(),
        g.b()
    );
    for (v, l) in f.iter() {
        let _ = writeln!(
            out,
            "  \"{},{}\" [label=\"{l}\", pos=\"{},{}!\"];",
            v.x,
            v.y,
            v.x - 1,
            v.y - 1
        );
    }
    for v in g.vertices() {
        if v.x < g.a() {
            let _ = writeln!(out, "  \"{},{}\" -- \"{},{}\";", v.x, v.y, v.x + 1, v.y);
        }
        if v.y < g.b() {
            let _ = writeln!(out, "  \"{},{}\" -- \"{},{}\";", v.x, v.y, v.x, v.y + 1);
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Ascii,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "ascii" => Ok(Format::Ascii),
            "dot" => Ok(Format::Dot),
            other => Err(Error::Input(format!(
                "unknown format {other:?}, expected json, ascii or dot"
            ))),
        }
    }
}

/// Text produced by a command and whether it reports success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }

    pub fn exit_code(&self) -> u8 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

/// Process exit code for a failed command.
pub fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => 3,
        _ => 2,
    }
}

fn parity_name(g: &GridGraph) -> Result<ParityCase> {
    Ok(normalize_orientation(g.a(), g.b())?.0.parity_case())
}

pub fn cmd_rn(a: usize, b: usize) -> Result<String> {
    let g = GridGraph::supported(a, b)?;
    Ok(format!(
        "grid={g}\nparity={}\nrn={}\nlower_bound={}\nupper_bound={}\n",
        parity_name(&g)?,
        rn_formula(a, b)?,
        rn_lower_bound(&g)?,
        rn_upper_bound_trivial(&g),
    ))
}

pub fn cmd_tplus(a: usize, b: usize) -> Result<String> {
    let g = GridGraph::supported(a, b)?;
    Ok(format!(
        "grid={g}\nparity={}\nt_plus={}\nmax_dx={}\nmax_dy={}\n",
        parity_name(&g)?,
        t_plus_formula(a, b)?,
        max_dx_formula(a, b),
        max_dx_formula(b, a),
    ))
}

pub fn cmd_label(a: usize, b: usize, format: Format) -> Result<String> {
    let f = optimal_labeling(&GridGraph::supported(a, b)?)?;
    Ok(match format {
        Format::Json => LabelingDocument::from_labeling(&f).to_json(),
        Format::Ascii => render_ascii(&f),
        Format::Dot => render_dot(&f),
    })
}

/// Checks a JSON labeling document. Parse and shape problems are errors;
/// a well-formed labeling that breaks the radio condition is a failed outcome.
pub fn cmd_verify(text: &str) -> Result<Outcome> {
    let doc = LabelingDocument::from_json(text)?;
    let f = doc.to_labeling()?;
    let violations = validate(&f);
    let actual = span(&f);
    if violations.is_empty() && actual == doc.span {
        return Ok(Outcome::ok(format!("VALID span={actual}\n")));
    }
    let mut text = String::new();
    if actual != doc.span {
        let _ = writeln!(text, "declared span {} but labels span {actual}", doc.span);
    }
    for v in &violations {
        let _ = writeln!(
            text,
            "violation {} {} gap={} required={}",
            v.u, v.v, v.actual_gap, v.required_gap
        );
    }
    let _ = writeln!(text, "INVALID violations={}", violations.len());
    Ok(Outcome { text, ok: false })
}

pub fn cmd_analyze(a: usize, b: usize) -> Result<String> {
    let g = GridGraph::supported(a, b)?;
    let s = rn_ordering(&g)?;
    let r = step_report(&s);
    let seq = s.as_slice();
    let mut out = format!(
        "# {g} {} D={} n={}\n",
        parity_name(&g)?,
        g.diameter(),
        g.n()
    );
    out.push_str("i\tu_i\tu_i+1\td_i\tf_i\tb_i\td_rect\n");
    for i in 0..r.d.len() {
        let rect = r.d_rect[i].map_or("-".to_string(), |x| x.to_string());
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{rect}",
            i + 1,
            seq[i],
            seq[i + 1],
            r.d[i],
            r.f_gaps[i],
            r.bumps[i]
        );
    }
    let _ = writeln!(out, "bumps={}", r.bump_events.len());
    for e in &r.bump_events {
        let _ = writeln!(
            out,
            "bump step={} magnitude={} offset={}",
            e.step, e.magnitude, e.offset
        );
    }
    let _ = writeln!(
        out,
        "sum_d={} t_plus={}",
        r.distance_sum(),
        t_plus_formula(a, b)?
    );
    let _ = writeln!(
        out,
        "sum_f={} span={} rn={}",
        r.span(),
        r.labels.last().copied().unwrap_or(0),
        rn_formula(a, b)?
    );
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    Rn,
    TPlus,
}

/// Guard used when the caller passes `--force`.
pub fn forced_limits(kind: OracleKind) -> OracleLimits {
    match kind {
        OracleKind::Rn => OracleLimits::with_max_n(63),
        OracleKind::TPlus => OracleLimits::with_max_n(24),
    }
}

/// Runs an oracle and compares it with the closed form. The result is
/// returned too so the caller can save the witness.
pub fn cmd_oracle(
    kind: OracleKind,
    a: usize,
    b: usize,
    limits: OracleLimits,
) -> Result<(Outcome, OracleResult)> {
    let g = GridGraph::new(a, b)?;
    let (name, res, formula) = match kind {
        OracleKind::Rn => ("rn", oracle_rn(&g, limits)?, rn_formula(a, b).ok()),
        OracleKind::TPlus => (
            "t_plus",
            oracle_t_plus(&g, limits)?,
            t_plus_formula(a, b).ok(),
        ),
    };
    let (verdict, ok) = match formula {
        Some(f) if f == res.value => ("MATCH", true),
        Some(_) => ("MISMATCH", false),
        None => ("NO-FORMULA", true),
    };
    let formula = formula.map_or("n/a".to_string(), |f| f.to_string());
    let text = format!(
        "grid={g}\n{name}_oracle={}\n{name}_formula={formula}\nverdict={verdict}\nnodes={}\nelapsed_ms={}\n",
        res.value,
        res.nodes_explored,
        res.elapsed.as_millis()
    );
    Ok((Outcome { text, ok }, res))
}

/// JSON for an oracle witness: a labeling document for rn, the vertex path
/// for t+.
pub fn witness_json(kind: OracleKind, res: &OracleResult) -> String {
    match kind {
        OracleKind::Rn => LabelingDocument::from_labeling(&res.labeling()).to_json(),
        OracleKind::TPlus => {
            let mut s =
                serde_json::to_string_pretty(res.witness.as_slice()).expect("vertices serialize");
            s.push('\n');
            s
        }
    }
}
