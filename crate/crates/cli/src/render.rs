use crate::config::OutputFormat;
use qrm_core::reed_muller::ParamRow;
use std::collections::BTreeSet;

pub fn table(rows: &[ParamRow], format: OutputFormat, title: &str) -> String {
    match format {
        OutputFormat::Csv => csv(rows),
        OutputFormat::Md => markdown_grid(rows, title),
        OutputFormat::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
    }
}

fn csv(rows: &[ParamRow]) -> String {
    let mut out = String::from("m,r,n,k,d\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{},{}\n", r.m, r.r, r.n, r.k, r.d));
    }
    out
}

/// `k` laid out with block lengths down and distances across.
fn markdown_grid(rows: &[ParamRow], title: &str) -> String {
    let ds: BTreeSet<u64> = rows.iter().map(|r| r.d).collect();
    let ns: BTreeSet<u64> = rows.iter().map(|r| r.n).collect();
    let mut out = format!("{title}\n\n| n \\ d |");
    for d in &ds {
        out.push_str(&format!(" {d} |"));
    }
    out.push_str("\n|---:|");
    for _ in &ds {
        out.push_str("---:|");
    }
    out.push('\n');
    for n in &ns {
        out.push_str(&format!("| {n} |"));
        for d in &ds {
            match rows.iter().find(|r| r.n == *n && r.d == *d) {
                Some(r) => out.push_str(&format!(" {} |", r.k)),
                None => out.push_str(" |"),
            }
        }
        out.push('\n');
    }
    out
}
