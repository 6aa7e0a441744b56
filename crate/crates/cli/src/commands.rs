//! Command bodies. Each returns the text rendering, the JSON result and the
//! exit code together so the two output modes cannot drift apart.

use std::fmt::Write;

use grassmann_roberts::bundles::{ch_q_upto, ch_tangent_upto};
use grassmann_roberts::chow::ChowAlgebra;
use grassmann_roberts::cone::{cone_chow_dims_in, roberts_report, verdict_table};
use grassmann_roberts::partition::enumerate_box;
use grassmann_roberts::pfaffian::classify_b;
use grassmann_roberts::series::{character_from_power_sums, elementary_from_power_sums, todd_from_power_sums};
use grassmann_roberts::{AntisymmetricMatrix, ChowElement, ChowRing, GrassmannShape, Partition, ReportMode};
use serde_json::{json, Value};

use crate::output;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;

pub struct Outcome {
    pub text: String,
    pub result: Value,
    pub exit: i32,
}

impl Outcome {
    fn ok(text: String, result: Value) -> Self {
        Outcome {
            text,
            result,
            exit: EXIT_YES,
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn subscript(k: usize) -> String {
    k.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

/// Each term on its own line followed by its Young diagram.
fn diagrams(c: &ChowElement) -> String {
    let mut out = String::new();
    for (p, q) in c.terms() {
        let _ = writeln!(out, "  {q}·{p}");
        for row in p.young_diagram().lines() {
            let _ = writeln!(out, "    {row}");
        }
    }
    out
}

pub fn roberts(shape: GrassmannShape, verdict_only: bool) -> Outcome {
    let ring = ChowRing::new(shape);
    let mode = if verdict_only {
        ReportMode::VerdictOnly
    } else {
        ReportMode::Full
    };
    let report = roberts_report(&ring, mode);
    let mut text = format!(
        "{shape}: t = {}, cone dimension {}\n",
        shape.dim(),
        report.cone_dimension
    );
    for r in &report.records {
        let _ = writeln!(
            text,
            "degree {} (index {}): td = {}; τ ≡ {}; zero: {}",
            r.degree,
            r.homological_index,
            r.todd_component,
            r.representative,
            yes_no(r.is_zero)
        );
    }
    match report.witness.and_then(|w| report.record(w)) {
        None => text.push_str("Roberts: yes\n"),
        Some(r) => {
            let _ = writeln!(
                text,
                "Roberts: no; witness degree {}; τ = {}",
                r.degree, r.representative
            );
        }
    }
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "degree": r.degree,
                "homological_index": r.homological_index,
                "todd_component": output::class(&r.todd_component),
                "representative": output::class(&r.representative),
                "is_zero": r.is_zero,
            })
        })
        .collect();
    let result = json!({
        "shape": output::shape(shape),
        "cone_dimension": report.cone_dimension,
        "mode": if verdict_only { "verdict-only" } else { "full" },
        "records": records,
        "verdict": report.verdict,
        "witness": report.witness,
    });
    Outcome {
        text,
        result,
        exit: if report.verdict { EXIT_YES } else { EXIT_NO },
    }
}

pub fn table(max_n: usize) -> Outcome {
    let rows = verdict_table(max_n);
    let mut text = String::new();
    for r in &rows {
        let witness = r.witness.map_or("-".to_string(), |w| w.to_string());
        let _ = writeln!(
            text,
            "G({},{})  Roberts: {:<3}  witness: {witness}",
            r.d,
            r.n,
            yes_no(r.verdict)
        );
    }
    let count = rows.iter().filter(|r| r.verdict).count();
    let _ = writeln!(text, "{count} of {} shapes are Roberts", rows.len());
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "d": r.d, "n": r.n, "verdict": r.verdict, "witness": r.witness }))
        .collect();
    Outcome::ok(
        text,
        json!({ "max_n": max_n, "rows": json_rows, "roberts_count": count, "shape_count": rows.len() }),
    )
}

pub fn basis(shape: GrassmannShape, degree: Option<usize>, show_diagrams: bool) -> Outcome {
    let degrees: Vec<usize> = match degree {
        Some(k) => vec![k],
        None => (0..=shape.dim()).collect(),
    };
    let mut text = String::new();
    let mut groups = Vec::new();
    for k in degrees {
        let parts = enumerate_box(shape, k);
        let listed: Vec<String> = parts.iter().map(Partition::to_string).collect();
        let _ = writeln!(text, "degree {k} ({}): {}", parts.len(), listed.join(" "));
        if show_diagrams {
            for p in &parts {
                let _ = writeln!(text, "  {p}");
                for row in p.young_diagram().lines() {
                    let _ = writeln!(text, "    {row}");
                }
            }
        }
        groups.push(json!({
            "degree": k,
            "count": parts.len(),
            "partitions": parts.iter().map(output::partition).collect::<Vec<_>>(),
        }));
    }
    Outcome::ok(text, json!({ "shape": output::shape(shape), "degrees": groups }))
}

/// A computed class, its optional reduction modulo `h`, and diagrams.
pub fn class_result(ring: &ChowRing, label: &str, c: &ChowElement, mod_h: bool, show: bool) -> Result<Outcome, String> {
    let mut text = format!("{label} = {c}\n");
    if show {
        text.push_str(&diagrams(c));
    }
    let mut result = json!({ "shape": output::shape(ring.shape()), "class": output::class(c) });
    if mod_h {
        let red = ring.reduce_mod_h(c).map_err(|e| e.to_string())?;
        let _ = writeln!(text, "mod h: {}; zero: {}", red.representative, yes_no(red.is_zero));
        result["mod_h"] = json!({ "representative": output::class(&red.representative), "is_zero": red.is_zero });
    }
    Ok(Outcome::ok(text, result))
}

pub fn pieri(shape: GrassmannShape, lambda: Partition, m: usize, mod_h: bool, show: bool) -> Result<Outcome, String> {
    if m > shape.cols() {
        return Err(format!("σ_{m} is zero in {shape}: m must be at most {}", shape.cols()));
    }
    let ring = ChowRing::new(shape);
    let a = ring.schubert(lambda.clone()).map_err(|e| e.to_string())?;
    let c = ring.pieri(&a, m).map_err(|e| e.to_string())?;
    class_result(&ring, &format!("{lambda}·σ{}", subscript(m)), &c, mod_h, show)
}

pub fn multiply(shape: GrassmannShape, a: Partition, b: Partition, mod_h: bool, show: bool) -> Result<Outcome, String> {
    let ring = ChowRing::new(shape);
    let x = ring.schubert(a.clone()).map_err(|e| e.to_string())?;
    let y = ring.schubert(b.clone()).map_err(|e| e.to_string())?;
    let c = ring.multiply(&x, &y).map_err(|e| e.to_string())?;
    class_result(&ring, &format!("{a}·{b}"), &c, mod_h, show)
}

pub fn reduce(shape: GrassmannShape, c: ChowElement, show: bool) -> Result<Outcome, String> {
    let ring = ChowRing::new(shape);
    let red = ring.reduce_mod_h(&c).map_err(|e| e.to_string())?;
    let mut text = format!(
        "class: {c}\nmod h: {}\nzero: {}\n",
        red.representative,
        yes_no(red.is_zero)
    );
    if show {
        text.push_str(&diagrams(&red.representative));
    }
    let result = json!({
        "shape": output::shape(shape),
        "class": output::class(&c),
        "representative": output::class(&red.representative),
        "is_zero": red.is_zero,
    });
    Ok(Outcome::ok(text, result))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BundleClass {
    Todd,
    Chern,
    Character,
}

impl BundleClass {
    fn symbol(self) -> &'static str {
        match self {
            BundleClass::Todd => "td",
            BundleClass::Chern => "c",
            BundleClass::Character => "ch",
        }
    }

    fn name(self) -> &'static str {
        match self {
            BundleClass::Todd => "todd",
            BundleClass::Chern => "chern",
            BundleClass::Character => "character",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bundle {
    Tangent,
    Quotient,
    Sub,
}

impl Bundle {
    fn name(self) -> &'static str {
        match self {
            Bundle::Tangent => "tangent",
            Bundle::Quotient => "quotient",
            Bundle::Sub => "sub",
        }
    }
}

/// Power sums of the Chern roots of `bundle` through degree `k`.
fn bundle_power_sums(ring: &ChowRing, bundle: Bundle, k: usize) -> Vec<ChowElement> {
    match bundle {
        Bundle::Tangent => ch_tangent_upto(ring, k).power_sums(),
        Bundle::Quotient => ch_q_upto(ring, k).power_sums(),
        Bundle::Sub => ch_q_upto(ring, k).power_sums().iter().map(ChowElement::neg).collect(),
    }
}

pub fn bundle(
    shape: GrassmannShape,
    which: Bundle,
    kind: BundleClass,
    max_degree: Option<usize>,
    mod_h: bool,
) -> Result<Outcome, String> {
    let t = shape.dim();
    let k = max_degree.unwrap_or(t);
    if k == 0 || k > t {
        return Err(format!("--max-degree must be in 1..={t} for {shape}"));
    }
    let ring = ChowRing::new(shape);
    let alg = ChowAlgebra::truncated(&ring, k);
    let p = bundle_power_sums(&ring, which, k);
    let components: Vec<ChowElement> = match kind {
        BundleClass::Todd => {
            let td = todd_from_power_sums(&alg, &p);
            (1..=k).map(|j| td.component(j)).collect()
        }
        BundleClass::Character => {
            let ch = character_from_power_sums(&alg, &p);
            (1..=k).map(|j| ch.component(j)).collect()
        }
        BundleClass::Chern => elementary_from_power_sums(&alg, &p),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, c) in components.iter().enumerate() {
        let j = i + 1;
        let _ = write!(text, "{}{} = {c}", kind.symbol(), subscript(j));
        let mut row = json!({ "degree": j, "class": output::class(c) });
        if mod_h {
            let red = ring.reduce_mod_h(c).map_err(|e| e.to_string())?;
            let _ = write!(text, "; mod h: {}; zero: {}", red.representative, yes_no(red.is_zero));
            row["mod_h"] = json!({ "representative": output::class(&red.representative), "is_zero": red.is_zero });
        }
        text.push('\n');
        rows.push(row);
    }
    let result =
        json!({ "shape": output::shape(shape), "bundle": which.name(), "class": kind.name(), "components": rows });
    Ok(Outcome::ok(text, result))
}

pub fn cone(shape: GrassmannShape) -> Outcome {
    let dims = cone_chow_dims_in(&ChowRing::new(shape)).dims;
    let listed: Vec<String> = dims.iter().map(usize::to_string).collect();
    let text = format!(
        "{shape}: dim A_i for i = 0..={}: [{}]\n",
        dims.len() - 1,
        listed.join(", ")
    );
    Outcome::ok(text, json!({ "shape": output::shape(shape), "dims": dims }))
}

pub fn classify(m: usize, n: usize) -> Result<Outcome, String> {
    let c = classify_b(m, n).map_err(|e| e.to_string())?;
    let text = format!(
        "B_{m}({n}): generators {}; height {}\nCI: {}; Roberts: {}\n",
        c.generators,
        c.height,
        yes_no(c.is_complete_intersection),
        yes_no(c.is_roberts)
    );
    let result = json!({
        "m": m,
        "n": n,
        "generators": c.generators.to_string(),
        "height": c.height.to_string(),
        "dimension_deficit": c.dimension_deficit.to_string(),
        "is_complete_intersection": c.is_complete_intersection,
        "is_roberts": c.is_roberts,
    });
    Ok(Outcome {
        text,
        result,
        exit: if c.is_roberts { EXIT_YES } else { EXIT_NO },
    })
}

pub fn eval(matrix: AntisymmetricMatrix) -> Outcome {
    let pf = matrix.pfaffian();
    let det = matrix.determinant();
    let check = &pf * &pf == det;
    let text = format!(
        "size: {}\nPf = {pf}\ndet = {det}\nPf² = det: {}\n",
        matrix.size(),
        yes_no(check)
    );
    let result = json!({
        "size": matrix.size(),
        "pfaffian": output::rational(&pf),
        "determinant": output::rational(&det),
        "square_equals_determinant": check,
    });
    Outcome {
        text,
        result,
        exit: if check { EXIT_YES } else { EXIT_NO },
    }
}
