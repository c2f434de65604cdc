//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{ConeData, Criterion, LatticeData, Report};

fn vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn vectors(vs: &[Vec<i64>]) -> String {
    if vs.is_empty() {
        return "none".to_string();
    }
    vs.iter().map(|v| vector(v)).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn criterion_line(out: &mut String, c: &Criterion) {
    let _ = writeln!(out, "  {:<34} {:<5}  [{}]", c.name, c.holds, c.citation);
}

fn cone_lines(out: &mut String, indent: &str, c: &ConeData) {
    let _ = writeln!(out, "{indent}dim {}  rays {}", c.dim, vectors(&c.rays));
    if !c.lineality.is_empty() {
        let _ = writeln!(out, "{indent}lineality {}", vectors(&c.lineality));
    }
}

fn lattice(l: &LatticeData) -> String {
    format!("basis {}  index {}", vectors(&l.basis), l.index)
}

fn completeness(complete: bool) -> &'static str {
    if complete {
        "complete"
    } else {
        "truncated at the exponent box"
    }
}

pub fn render(report: &Report) -> String {
    let mut out = String::new();
    let ring = &report.ring;
    let _ = writeln!(
        out,
        "ring: {} variables, grading rank {}",
        ring.variables.len(),
        ring.grading_rank
    );
    for v in &ring.variables {
        let _ = writeln!(out, "  {:<8} {}", v.name, vector(&v.degree));
    }

    if let Some(a) = &report.analysis {
        let _ = writeln!(out, "atlas: {} charts", a.atlas.charts.len());
        for c in &a.atlas.charts {
            let _ = writeln!(
                out,
                "  {:<16} D_S {}  prime points {}",
                c.support,
                lattice(&c.degree_lattice),
                yes_no(c.prime_points.holds)
            );
        }
        match &a.atlas.core_support {
            Some(core) => {
                let _ = writeln!(out, "core support: {core}");
            }
            None => out.push_str("Proj is empty: no relevant element\n"),
        }
        out.push_str("weight cone:\n");
        cone_lines(&mut out, "  ", &a.weight_cone);
        out.push_str("criteria:\n");
        for c in &a.criteria {
            criterion_line(&mut out, c);
        }
        if let Some(w) = &a.prime_point_witness {
            let _ = writeln!(out, "  non-basis degrees {} with determinant {}", w.support, w.determinant);
        }
    }

    if let Some(s) = &report.sections {
        let _ = writeln!(out, "twist: {}  exponent box {}", vector(&s.twist), s.exponent_box);
        let g = &s.global_sections;
        let _ = writeln!(
            out,
            "global sections: {} ({})",
            g.monomials.len(),
            completeness(g.complete)
        );
        for m in &g.monomials {
            let _ = writeln!(out, "  {m}");
        }
        let a = &s.graded_component;
        let _ = writeln!(
            out,
            "graded component: {} ({})",
            a.monomials.len(),
            completeness(a.complete)
        );
        for m in &a.monomials {
            let _ = writeln!(out, "  {m}");
        }
        out.push_str("chart sections:\n");
        for c in &s.charts {
            let _ = writeln!(out, "  {:<16} {} ({})", c.support, c.count, completeness(c.complete));
        }
        criterion_line(&mut out, &s.hypothesis);
    }

    if let Some(l) = &report.line_bundle {
        let _ = writeln!(out, "twist: {}", vector(&l.twist));
        let _ = writeln!(out, "twist lattice: {}", lattice(&l.twist_lattice));
        criterion_line(&mut out, &l.criterion);
        match &l.necessity {
            Some(c) => criterion_line(&mut out, c),
            None => out.push_str("  (criterion is sufficient; necessity is not claimed)\n"),
        }
        for u in &l.chart_units {
            let _ = writeln!(
                out,
                "  {:<16} unit {}",
                u.support,
                u.unit.as_deref().unwrap_or("none: d is not in D_S")
            );
        }
    }

    if let Some(s) = &report.line_bundle_scan {
        let _ = writeln!(out, "twist lattice: {}", lattice(&s.twist_lattice));
        let _ = writeln!(out, "scan over [-{0}, {0}]^r  [{1}]", s.bound, s.citation);
        if s.necessary_and_sufficient {
            out.push_str("  (weighted projective: the criterion is also necessary)\n");
        }
        let hits: Vec<String> = s
            .rows
            .iter()
            .filter(|r| r.criterion_satisfied)
            .map(|r| vector(&r.twist))
            .collect();
        let _ = writeln!(out, "criterion satisfied at {} of {} twists:", hits.len(), s.rows.len());
        for chunk in hits.chunks(8) {
            let _ = writeln!(out, "  {}", chunk.join(" "));
        }
    }

    if let Some(f) = &report.git_fan {
        out.push_str("support (weight cone):\n");
        cone_lines(&mut out, "  ", &f.support);
        let maximal = f.chambers.iter().filter(|c| c.maximal).count();
        let _ = writeln!(
            out,
            "chambers: {} ({} maximal), from {} distinct orbit cones",
            f.chambers.len(),
            maximal,
            f.distinct_orbit_cones
        );
        for (i, c) in f.chambers.iter().enumerate() {
            let _ = writeln!(
                out,
                "  [{i}]{} sample {}  semistable {}",
                if c.maximal { " maximal" } else { "" },
                vector(&c.sample_degree),
                c.semistable_supports.join(" ")
            );
            cone_lines(&mut out, "      ", &c.cone);
        }
    }

    if let Some(c) = &report.comparison {
        out.push_str("chamber:\n");
        cone_lines(&mut out, "  ", &c.chamber);
        let _ = writeln!(
            out,
            "witness: {} of degree {}",
            c.witness_support,
            vector(&c.witness_degree)
        );
        out.push_str("criteria:\n");
        criterion_line(&mut out, &c.birational);
        criterion_line(&mut out, &c.single_chamber);
        criterion_line(&mut out, &c.simplicial);
        criterion_line(&mut out, &c.ray_generated);
        match &c.veronese_generated {
            Some(v) => criterion_line(&mut out, v),
            None => out.push_str("  veronese generation unavailable: weight cone not pointed\n"),
        }
        criterion_line(&mut out, &c.isomorphism_criterion);
        out.push_str("sigma (dual of the weight cone):\n");
        cone_lines(&mut out, "  ", &c.sigma);
        let dims: Vec<String> = c.veronese_dims.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(
            out,
            "veronese dims: {} ({})",
            dims.join(" "),
            completeness(c.veronese_dims_complete)
        );
    }
    out
}
