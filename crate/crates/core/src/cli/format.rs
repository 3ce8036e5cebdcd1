use std::fmt::Write;

use crate::bound::{BoundReport, Convention, Flag};

const CSV_COLUMNS: [&str; 12] = [
    "n",
    "c",
    "e",
    "degL",
    "p",
    "threshold",
    "deg_pex_paper",
    "deg_pex_dual",
    "deg_abelian",
    "bound_paper",
    "bound_dual",
    "flags",
];

fn flag_name(flag: Flag) -> &'static str {
    match flag {
        Flag::PaperModeNonpositive => "paper_mode_nonpositive",
        Flag::EBelowSimpleThreshold => "e_below_simple_threshold",
        Flag::UniformSpecializationChecked => "uniform_specialization_checked",
    }
}

fn joined<T: ToString>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn csv_header() -> String {
    CSV_COLUMNS.join(",")
}

/// One CSV record. List-valued fields use `;` internally so no quoting is
/// ever needed.
pub fn csv_row(r: &BoundReport) -> String {
    let flags: Vec<&str> = r.flags.iter().map(|&f| flag_name(f)).collect();
    [
        r.n.to_string(),
        r.c.to_string(),
        joined(&r.exponents, ";"),
        r.deg_l.to_string(),
        r.prime_used.to_string(),
        r.threshold.to_string(),
        r.deg_pex_paper.to_string(),
        r.deg_pex_dual.to_string(),
        r.deg_abelian.to_string(),
        r.bound_paper.to_string(),
        r.bound_dual.to_string(),
        flags.join(";"),
    ]
    .join(",")
}

/// Human-readable report restricted to the conventions selected by `mode`.
pub fn table(r: &BoundReport) -> String {
    let mut out = String::new();
    let conventions: Vec<Convention> = [Convention::Paper, Convention::Dual]
        .into_iter()
        .filter(|&c| r.mode.includes(c))
        .collect();
    let label = |c: Convention| match c {
        Convention::Paper => "paper",
        Convention::Dual => "dual",
    };

    let mut line = |key: &str, value: String| {
        let _ = writeln!(out, "{key:<16}{value}");
    };
    line("n", r.n.to_string());
    line("c", r.c.to_string());
    line("exponents", joined(&r.exponents, ","));
    line("degL", r.deg_l.to_string());
    line(
        "p",
        format!("{} (requested {})", r.prime_used, r.p_requested),
    );
    line("threshold", r.threshold.to_string());
    line("deg_cotangent", r.deg_cotangent.to_string());
    line(
        &format!("{}_table", r.w_table_kind),
        joined(&r.w_table, ","),
    );
    line("deg_abelian", r.deg_abelian.to_string());
    for &c in &conventions {
        line(&format!("deg_pex_{}", label(c)), r.deg_pex(c).to_string());
    }
    for &c in &conventions {
        line(&format!("bound_{}", label(c)), r.bound(c).to_string());
    }
    let flags: Vec<&str> = r.flags.iter().map(|&f| flag_name(f)).collect();
    line(
        "flags",
        if flags.is_empty() {
            "-".into()
        } else {
            flags.join(",")
        },
    );

    let _ = write!(out, "{:>4}  {:>12}  {:>12}", "h", "binomial", "inner_sum");
    for &c in &conventions {
        let _ = write!(out, "  {:>20}", format!("term_{}", label(c)));
    }
    out.push('\n');
    for row in &r.inner_sums {
        let _ = write!(
            out,
            "{:>4}  {:>12}  {:>12}",
            row.h, row.binomial, row.inner_sum
        );
        for &c in &conventions {
            let term = match c {
                Convention::Paper => &row.term_paper,
                Convention::Dual => &row.term_dual,
            };
            let _ = write!(out, "  {term:>20}");
        }
        out.push('\n');
    }
    out
}
