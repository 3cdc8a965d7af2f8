//! Text and CSV renderings of the report models.

use std::fmt::Write;

use k3walls::rational::format_rational;
use k3walls::Rational;

use crate::report::{
    is_hilbert, vector_of, Curve, DecomposeReport, Fraction, Mode, PathReport, WallRow, WallTableReport,
};

fn frac(f: &Fraction) -> String {
    format_rational(&Rational::from(*f))
}

fn vec3(a: &[i64; 3]) -> String {
    vector_of(*a).to_string()
}

/// `x^2 + px + y^2 = q`.
pub fn expanded_circle(center: &Rational, radius_sq: &Rational) -> String {
    let p = -center * Rational::from_integer(2);
    let q = radius_sq - center * center;
    let mut out = String::from("x^2");
    if *p.numer() != 0 {
        let sign = if *p.numer() < 0 { '-' } else { '+' };
        let magnitude = if *p.numer() < 0 { -p } else { p };
        let coefficient = if magnitude == Rational::from_integer(1) {
            String::new()
        } else if magnitude.is_integer() {
            format_rational(&magnitude)
        } else {
            format!("({})", format_rational(&magnitude))
        };
        let _ = write!(out, " {sign} {coefficient}x");
    }
    let _ = write!(out, " + y^2 = {}", format_rational(&q));
    out
}

/// `(x + c)^2 + y^2 = r²`.
pub fn centered_circle(center: &Rational, radius_sq: &Rational) -> String {
    let shift = match *center.numer() {
        0 => "x^2".to_string(),
        n if n < 0 => format!("(x + {})^2", format_rational(&-center)),
        _ => format!("(x - {})^2", format_rational(center)),
    };
    format!("{shift} + y^2 = {}", format_rational(radius_sq))
}

/// Hilbert tables use the expanded form, every other table the centered one.
pub fn curve_equation(curve: Option<&Curve>, hilbert_style: bool) -> String {
    match curve {
        None => "-".to_string(),
        Some(Curve::Vertical { x0 }) => format!("x = {}", frac(x0)),
        Some(Curve::Semicircle { center, radius_sq }) => {
            let (c, r) = (Rational::from(*center), Rational::from(*radius_sq));
            if hilbert_style {
                expanded_circle(&c, &r)
            } else {
                centered_circle(&c, &r)
            }
        }
    }
}

fn type_label(t: &str) -> &str {
    match t {
        "lagrangian" => "Lagrangian fibration",
        other => other,
    }
}

fn gamma_cell(g: &Option<Fraction>) -> String {
    g.as_ref().map(frac).unwrap_or_else(|| "-".to_string())
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|i| rows.iter().filter_map(|r| r.get(i)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn mode_line(mode: &Mode) -> String {
    match mode {
        Mode::Hilbert { n } => format!("Hilbert scheme of {n} points"),
        Mode::Transported { from, m } => format!("transported from {} by Phi_{m}", vec3(from)),
        Mode::Candidate => "candidate search".to_string(),
    }
}

fn completeness(complete: bool) -> &'static str {
    if complete {
        "search: complete"
    } else {
        "search: possibly incomplete"
    }
}

pub fn walls_text(report: &WallTableReport) -> String {
    let hilbert_style = is_hilbert(report.vector);
    let mut out =
        format!("v = {}, d = {}, {}\n", vec3(&report.vector), report.surface.d, mode_line(&report.mode));
    let mut rows = vec![["gamma", "a", "a^2", "(v,a)", "wall", "type"].map(String::from).to_vec()];
    for w in &report.walls {
        rows.push(vec![
            gamma_cell(&w.gamma),
            vec3(&w.a),
            w.a_sq.to_string(),
            w.pairing.to_string(),
            curve_equation(w.curve.as_ref(), hilbert_style),
            type_label(&w.wall_type).to_string(),
        ]);
    }
    if report.walls.is_empty() {
        out.push_str("no walls\n");
    } else {
        out.push_str(&columns(&rows));
    }
    out.push_str(completeness(report.complete));
    out.push('\n');
    out
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is UTF-8")
}

fn curve_cells(curve: &Option<Curve>) -> [String; 4] {
    match curve {
        None => ["none".into(), String::new(), String::new(), String::new()],
        Some(Curve::Semicircle { center, radius_sq }) => {
            ["semicircle".into(), frac(center), frac(radius_sq), String::new()]
        }
        Some(Curve::Vertical { x0 }) => ["vertical".into(), String::new(), String::new(), frac(x0)],
    }
}

pub fn walls_csv(report: &WallTableReport) -> String {
    let mut w = csv_writer();
    let header = ["gamma", "r", "c", "s", "a_sq", "pairing", "kind", "center", "radius_sq", "x0", "type"];
    w.write_record(header).expect("in-memory write");
    for row in &report.walls {
        let [kind, center, radius_sq, x0] = curve_cells(&row.curve);
        let gamma = row.gamma.as_ref().map(frac).unwrap_or_default();
        let [r, c, s] = row.a.map(|x| x.to_string());
        let record =
            [gamma, r, c, s, row.a_sq.to_string(), row.pairing.to_string(), kind, center, radius_sq, x0];
        w.write_record(record.iter().map(String::as_str).chain([row.wall_type.as_str()]))
            .expect("in-memory write");
    }
    finish(w)
}

pub fn path_text(report: &PathReport, precision: usize) -> String {
    let mut out = format!(
        "path x = {} for v = {}, d = {}, above y = {}\n",
        frac(&report.x0),
        vec3(&report.vector),
        report.surface.d,
        frac(&report.y_min)
    );
    if report.hits.is_empty() {
        out.push_str("no walls crossed\n");
    } else {
        let mut rows = vec![["gamma", "a", "y^2", "y"].map(String::from).to_vec()];
        for h in &report.hits {
            let y = k3walls::rational::to_f64(&Rational::from(h.y_sq)).sqrt();
            rows.push(vec![gamma_cell(&h.gamma), vec3(&h.a), frac(&h.y_sq), format!("{y:.precision$}")]);
        }
        out.push_str(&columns(&rows));
    }
    out.push_str(completeness(report.complete));
    out.push('\n');
    out
}

pub fn path_csv(report: &PathReport) -> String {
    let mut w = csv_writer();
    w.write_record(["gamma", "r", "c", "s", "y_sq"]).expect("in-memory write");
    for h in &report.hits {
        let [r, c, s] = h.a.map(|x| x.to_string());
        let gamma = h.gamma.as_ref().map(frac).unwrap_or_default();
        w.write_record([gamma, r, c, s, frac(&h.y_sq)]).expect("in-memory write");
    }
    finish(w)
}

fn wall_summary(wall: &WallRow, hilbert_style: bool) -> String {
    let gamma = match &wall.gamma {
        Some(g) => format!("gamma = {}, ", frac(g)),
        None => String::new(),
    };
    format!(
        "wall {gamma}a = {}, {} ({})",
        vec3(&wall.a),
        curve_equation(wall.curve.as_ref(), hilbert_style),
        type_label(&wall.wall_type)
    )
}

fn joined(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
}

pub fn decompose_text(report: &DecomposeReport) -> String {
    let mut out = format!("v = {}, d = {}\n", vec3(&report.vector), report.surface.d);
    out.push_str(&wall_summary(&report.wall, is_hilbert(report.vector)));
    out.push('\n');
    if report.decompositions.is_empty() {
        let _ = writeln!(out, "no decompositions with at most {} parts", report.parts_max);
    }
    for (i, dec) in report.decompositions.iter().enumerate() {
        let parts: Vec<_> = dec.parts.iter().map(vec3).collect();
        let weights: Vec<_> = dec.weights.iter().map(frac).collect();
        let _ = writeln!(out, "decomposition {}: {}", i + 1, parts.join(" + "));
        let _ = writeln!(out, "  weights {}", weights.join(", "));
        match &dec.dims {
            Some(d) => {
                let fibers: Vec<_> = d.fiber_dims.iter().map(|k| format!("P^{k}")).collect();
                let _ = writeln!(
                    out,
                    "  part dims {}; fibers {}; stratum {} of {}",
                    joined(&d.part_moduli_dims),
                    fibers.join(", "),
                    d.stratum_dim,
                    d.total_space_dim
                );
            }
            None => {
                let _ = writeln!(out, "  dims: {}", dec.note.as_deref().unwrap_or("unavailable"));
            }
        }
    }
    out
}

pub fn decompose_csv(report: &DecomposeReport) -> String {
    let mut w = csv_writer();
    w.write_record([
        "index",
        "parts",
        "weights",
        "part_dims",
        "fiber_dims",
        "stratum_dim",
        "total_space_dim",
        "note",
    ])
    .expect("in-memory write");
    for (i, dec) in report.decompositions.iter().enumerate() {
        let parts: Vec<_> = dec.parts.iter().map(vec3).collect();
        let weights: Vec<_> = dec.weights.iter().map(frac).collect();
        let space = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        let (part_dims, fibers, stratum, total) = match &dec.dims {
            Some(d) => (
                space(&d.part_moduli_dims),
                space(&d.fiber_dims),
                d.stratum_dim.to_string(),
                d.total_space_dim.to_string(),
            ),
            None => Default::default(),
        };
        w.write_record([
            (i + 1).to_string(),
            parts.join(" + "),
            weights.join(" "),
            part_dims,
            fibers,
            stratum,
            total,
            dec.note.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    finish(w)
}
