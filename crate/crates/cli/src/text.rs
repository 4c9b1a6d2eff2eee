//! Human-readable renderings. JSON is the contract; these are for terminals.

use std::fmt::Write;

use kseg_core::enumeration::CorpusVerdict;
use kseg_core::structure::{CheckItem, DecompositionDoc};
use kseg_core::{SemigroupDoc, Violation};

use crate::commands::{Analysis, EnumerationCount, Refusal};

fn set(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

pub fn semigroup(doc: &SemigroupDoc) -> String {
    let width = doc
        .elements
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let _ = write!(out, "{:>width$} |", "*");
    for e in &doc.elements {
        let _ = write!(out, " {e:>width$}");
    }
    out.push('\n');
    out.push_str(&"-".repeat((width + 1) * (doc.elements.len() + 1) + 1));
    out.push('\n');
    for (e, row) in doc.elements.iter().zip(&doc.table) {
        let _ = write!(out, "{e:>width$} |");
        for x in row {
            let _ = write!(out, " {x:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn violations(vs: &[Violation]) -> String {
    let mut out = format!("invalid: {} violation(s)\n", vs.len());
    for v in vs {
        let _ = writeln!(out, "  {v}");
    }
    out
}

pub fn analysis(a: &Analysis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order                 {}", a.order);
    let _ = writeln!(out, "categorical at zero   {}", a.categorical_at_zero);
    if let Some(w) = &a.witness {
        let _ = writeln!(out, "witness               ({}, {}, {})", w.f, w.g, w.h);
    }
    let _ = writeln!(out, "left annihilator      {}", set(&a.annihilators.left));
    let _ = writeln!(out, "right annihilator     {}", set(&a.annihilators.right));
    let _ = writeln!(out, "quasi-annihilator     {}", set(&a.annihilators.quasi));
    let degree = a
        .nilpotency_degree
        .map_or_else(|| "not nilpotent".to_string(), |d| d.to_string());
    let _ = writeln!(out, "nilpotency degree     {degree}");
    let _ = writeln!(
        out,
        "S^3=0 iff S=Ann_q     {}",
        a.three_nilpotent_iff_quasi_annihilated
    );
    out
}

pub fn decomposition(d: &DecompositionDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Ann_l  {}", set(&d.annihilators.left));
    let _ = writeln!(out, "Ann_r  {}", set(&d.annihilators.right));
    let _ = writeln!(out, "Ann_q  {}", set(&d.annihilators.quasi));
    let _ = writeln!(out, "T      {}", set(&d.t_elements));
    for (k, p) in d.p_classes.iter().enumerate() {
        let _ = writeln!(out, "P{}     {}", k + 1, set(p));
    }
    for (k, q) in d.q_classes.iter().enumerate() {
        let _ = writeln!(out, "Q{}     {}", k + 1, set(q));
    }
    for n in &d.n_classes {
        let _ = writeln!(out, "N{},{}   {}", n.i, n.lambda, set(&n.members));
    }
    let _ = writeln!(
        out,
        "W ({} x {}, rows by lambda)",
        d.sandwich.lambda_count, d.sandwich.i_count
    );
    for row in &d.sandwich.rows {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    for p in &d.phi {
        let _ = writeln!(out, "phi({}) = ({},{})", p.class, p.image_i, p.image_lambda);
    }
    let _ = writeln!(
        out,
        "greatest congruence scope: {}",
        d.greatest_congruence_scope
    );
    for (name, ok) in &d.verified {
        let _ = writeln!(out, "{:<5} {name}", if *ok { "ok" } else { "FAIL" });
    }
    for w in &d.witnesses {
        let _ = writeln!(out, "  {w}");
    }
    out
}

pub fn refusal(r: &Refusal) -> String {
    format!("refused: {}\n", r.refused)
}

pub fn counts(c: &EnumerationCount) -> String {
    format!(
        "order {}: scanned {}, associative {}, categorical {}, emitted {}\n",
        c.order, c.scanned, c.associative, c.categorical, c.emitted
    )
}

pub fn verdict(v: &CorpusVerdict) -> String {
    let mut out =
        String::from("order     tables  associative  K-semigroups  cube-criterion-exhibits\n");
    for o in &v.orders {
        let _ = writeln!(
            out,
            "{:>5} {:>10} {:>12} {:>13} {:>24}",
            o.order, o.total_tables, o.associative, o.k_semigroups, o.cube_criterion_exhibits
        );
    }
    let _ = writeln!(out, "property failures: {}", v.property_failures.len());
    for f in &v.property_failures {
        let _ = writeln!(
            out,
            "  {} on {:?}: {}",
            f.property, f.semigroup.table, f.witness
        );
    }
    out
}

pub fn checks(items: &[CheckItem]) -> String {
    let mut out = String::new();
    for item in items {
        match &item.witness {
            None => {
                let _ = writeln!(out, "PASS {}", item.name);
            }
            Some(w) => {
                let _ = writeln!(out, "FAIL {}: {w}", item.name);
            }
        }
    }
    out
}
