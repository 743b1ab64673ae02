//! `isogr`: exact equivariant cohomology on isotropic Grassmannians.
//!
//! Exit codes: 0 success; 1 argument/parse problems; 2 the requested space or
//! operation is out of scope; 3 (with --strict) the computation succeeded but
//! some reported quantity is only a bound.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use isogr_core::bbw::{bbw_cohomology, BundleSummand, CohomResult, GrassmannianSpace};
use isogr_core::branching::{candidate_restrictions, restrict, BranchTarget};
use isogr_core::diagrams::Partition;
use isogr_core::spectral::{e1_page, globality_scan, graded_piece, DegreeStatus, ScanVerdict};
use isogr_core::weights::{
    classify_grassmannian, fundamental_coords, fundamental_string, space_name, AmbientWeight,
    DominantWeight, Family, GroupType, IrrepMultiset,
};
use isogr_core::Error;

#[derive(Parser)]
#[command(name = "isogr", version, about = "Cohomology of equivariant bundles on isotropic Grassmannians", long_about = None)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Exit with status 3 when any reported quantity is not exact.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Name and classify spaces; accepts ranges like C4..C6 and 1..4.
    Classify {
        /// Ambient group, e.g. C4 or B4..B6.
        #[arg(long)]
        group: String,
        /// Isotropic dimension k, e.g. 2 or 1..4.
        #[arg(long)]
        k: String,
    },
    /// Cohomology of a single irreducible bundle.
    Bbw {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        /// Partition label on the dual tautological bundle, e.g. "[2,1]".
        #[arg(long)]
        alpha: String,
        /// Dominant weight on the subquotient, e.g. "[2]" or "[1,-1]".
        #[arg(long)]
        beta: String,
    },
    /// Restrict a Schur functor to a symplectic/orthogonal structure group.
    Branch {
        /// Target group by defining dimension: sp4, so7, so8, ...
        #[arg(long)]
        target: String,
        #[arg(long)]
        lam: String,
    },
    /// Schur-functor expansion of the graded pieces of Lambda^j T.
    Decompose {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        /// Restrict to one filtration index.
        #[arg(long)]
        q: Option<usize>,
    },
    /// The multiplicity page converging to H^*(X, Lambda^j T).
    E1 {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        /// Exterior power, e.g. 2 or 0..4.
        #[arg(long)]
        j: String,
    },
    /// Hochschild cohomology bounds in degree l.
    Hh {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        /// Degree, e.g. 3 or 1..5.
        #[arg(long)]
        l: String,
    },
    /// Scan degrees 1..=lmax for certified nonvanishing higher cohomology.
    Scan {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lmax: usize,
    },
}

fn parse_group(s: &str) -> Result<(Family, usize, usize), Error> {
    // "C4", "C4..6", "C4..C6"
    let s = s.trim();
    let bad = || Error::Parse(format!("bad group spec {s:?}; expected e.g. C4 or C4..C6"));
    let family: Family = s.get(..1).ok_or_else(bad)?.parse()?;
    let rest = &s[1..];
    if let Some((lo, hi)) = rest.split_once("..") {
        let lo: usize = lo.parse().map_err(|_| bad())?;
        let hi = hi.strip_prefix(family.letter()).unwrap_or(hi);
        let hi: usize = hi.parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((family, lo, hi))
    } else {
        let n: usize = rest.parse().map_err(|_| bad())?;
        Ok((family, n, n))
    }
}

fn parse_range(s: &str) -> Result<(usize, usize, bool), Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad range {s:?}; expected e.g. 3 or 1..4"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.parse().map_err(|_| bad())?;
        let hi: usize = hi.parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((lo, hi, true))
    } else {
        let v: usize = s.parse().map_err(|_| bad())?;
        Ok((v, v, false))
    }
}

fn parse_weight(s: &str, g: GroupType) -> Result<DominantWeight, Error> {
    let w: AmbientWeight = s.parse()?;
    DominantWeight::new(w.twice().to_vec(), g)
}

fn weight_value(w: &DominantWeight, g: GroupType) -> Value {
    let fund = fundamental_string(&fundamental_coords(w, g).expect("rank agrees"));
    json!({ "eps": w.to_string(), "fund": fund })
}

fn weight_table(w: &DominantWeight, g: GroupType) -> String {
    let fund = fundamental_string(&fundamental_coords(w, g).expect("rank agrees"));
    format!("{w} = {fund}")
}

fn multiset_value(ms: &IrrepMultiset, g: GroupType) -> Value {
    Value::Array(
        ms.iter()
            .map(|(w, m)| {
                let mut v = weight_value(w, g);
                v["mult"] = json!(m);
                v
            })
            .collect(),
    )
}

fn multiset_table(ms: &IrrepMultiset, g: GroupType) -> String {
    if ms.is_empty() {
        return "-".to_string();
    }
    ms.iter()
        .map(|(w, m)| format!("{} x{m}", weight_table(w, g)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn status_str(s: DegreeStatus) -> &'static str {
    match s {
        DegreeStatus::Exact => "exact",
        DegreeStatus::Bounded => "bounded",
        DegreeStatus::Undetermined => "undetermined",
    }
}

struct Output {
    format: Format,
    items: Vec<Value>,
    lines: Vec<String>,
    inexact: bool,
}

impl Output {
    fn new(format: Format) -> Self {
        Output { format, items: Vec::new(), lines: Vec::new(), inexact: false }
    }

    fn push(&mut self, item: Value, lines: Vec<String>) {
        self.items.push(item);
        self.lines.extend(lines);
    }

    fn finish(self) -> bool {
        use std::io::Write;
        let stdout = std::io::stdout();
        let mut h = stdout.lock();
        let res = match self.format {
            Format::Json => {
                let v = if self.items.len() == 1 {
                    self.items.into_iter().next().unwrap()
                } else {
                    Value::Array(self.items)
                };
                writeln!(h, "{}", serde_json::to_string_pretty(&v).expect("serializable"))
            }
            Format::Table => self.lines.iter().try_for_each(|line| writeln!(h, "{line}")),
        };
        if let Err(e) = res {
            // A closed pipe downstream is not our error; anything else is fatal.
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            eprintln!("error: {e}");
            std::process::exit(1);
        }
        self.inexact
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let mut out = Output::new(cli.format);
    match cli.cmd {
        Cmd::Classify { group, k } => {
            let (family, n_lo, n_hi) = parse_group(&group)?;
            let (k_lo, k_hi, k_ranged) = parse_range(&k)?;
            let ranged = n_lo < n_hi || k_ranged;
            for n in n_lo..=n_hi {
                for kk in k_lo..=k_hi {
                    let cls = match classify_grassmannian(family, kk, n) {
                        Ok(c) => c,
                        Err(e) if ranged => {
                            let _ = e;
                            continue;
                        }
                        Err(e) => return Err(e),
                    };
                    let name = space_name(family, kk, n);
                    out.push(
                        json!({
                            "space": name,
                            "family": family.to_string(),
                            "n": n,
                            "k": kk,
                            "classification": cls.to_string(),
                        }),
                        vec![format!("{name:<12} {family}{n}  k={kk:<2} {cls}")],
                    );
                }
            }
            if out.items.is_empty() {
                return Err(Error::Parse("no valid (n, k) in the requested ranges".into()));
            }
        }
        Cmd::Bbw { group, k, alpha, beta } => {
            let (family, n, n_hi) = parse_group(&group)?;
            if n != n_hi {
                return Err(Error::Parse("bbw expects a single group, not a range".into()));
            }
            let sp = GrassmannianSpace::new(family, k, n)?;
            let alpha: Partition = alpha.parse()?;
            let beta = parse_weight(&beta, sp.levi_group())?;
            let summand = BundleSummand::new(&sp, alpha.clone(), beta.clone())?;
            let outcome = bbw_cohomology(&sp, &summand);
            let g = sp.ambient_group();
            let ext = if outcome.extended { " (extended)" } else { "" };
            match outcome.result {
                CohomResult::Acyclic => out.push(
                    json!({
                        "space": sp.name(), "alpha": alpha.to_string(), "beta": beta.to_string(),
                        "status": "acyclic", "extended": outcome.extended,
                    }),
                    vec![format!("{} {alpha};{beta}: acyclic{ext}", sp.name())],
                ),
                CohomResult::Cohomology { degree, weight } => out.push(
                    json!({
                        "space": sp.name(), "alpha": alpha.to_string(), "beta": beta.to_string(),
                        "status": "cohomology", "degree": degree,
                        "weight": weight_value(&weight, g), "extended": outcome.extended,
                    }),
                    vec![format!(
                        "{} {alpha};{beta}: H^{degree} = V({}){ext}",
                        sp.name(),
                        weight_table(&weight, g)
                    )],
                ),
            }
        }
        Cmd::Branch { target, lam } => {
            let target: BranchTarget = target.parse()?;
            let lam: Partition = lam.parse()?;
            let g = target.group()?;
            if lam.height() <= target.rank() {
                let ms = restrict(&lam, target)?;
                out.push(
                    json!({
                        "target": target.to_string(), "lam": lam.to_string(),
                        "stable": true, "terms": multiset_value(&ms, g),
                    }),
                    vec![format!("{lam} | {target}: {}", multiset_table(&ms, g))],
                );
            } else {
                out.inexact = true;
                let cands = candidate_restrictions(&lam, target)?;
                let entries: Vec<Value> = cands
                    .iter()
                    .map(|(w, b)| {
                        let mut v = weight_value(w, g);
                        v["max_mult"] = json!(b);
                        v
                    })
                    .collect();
                let line = cands
                    .iter()
                    .map(|(w, b)| format!("{} x<={b}", weight_table(w, g)))
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push(
                    json!({
                        "target": target.to_string(), "lam": lam.to_string(),
                        "stable": false, "bounds": entries,
                    }),
                    vec![format!("{lam} | {target} (outside stable range): {line}")],
                );
            }
        }
        Cmd::Decompose { group, k, j, q } => {
            let (family, n, n_hi) = parse_group(&group)?;
            if n != n_hi {
                return Err(Error::Parse("decompose expects a single group".into()));
            }
            let sp = GrassmannianSpace::new(family, k, n)?;
            let lg = sp.levi_group();
            let qs: Vec<usize> = match q {
                Some(q) if q > j => {
                    return Err(Error::Parse(format!("q={q} exceeds j={j}")));
                }
                Some(q) => vec![q],
                None => (0..=j).collect(),
            };
            for q in qs {
                let piece = graded_piece(&sp, j, q)?;
                let mut factors = Vec::new();
                let mut lines = vec![format!("{} Lambda^{j} T, filtration {q}:", sp.name())];
                for f in &piece.factors {
                    let gl: Vec<Value> = f
                        .gl
                        .iter()
                        .map(|(a, c)| json!({ "alpha": a.to_string(), "mult": c }))
                        .collect();
                    let gl_line = f
                        .gl
                        .iter()
                        .map(|(a, c)| format!("{a} x{c}"))
                        .collect::<Vec<_>>()
                        .join(", ");
                    let levi = match (&f.levi_known, &f.levi_candidates) {
                        (Some(ms), _) => {
                            lines.push(format!(
                                "  lam={} gl[{gl_line}] levi: {}",
                                f.lam,
                                multiset_table(ms, lg)
                            ));
                            json!({ "stable": true, "terms": multiset_value(ms, lg) })
                        }
                        (None, Some(cands)) => {
                            out.inexact = true;
                            let line = cands
                                .iter()
                                .map(|(w, b)| format!("{} x<={b}", weight_table(w, lg)))
                                .collect::<Vec<_>>()
                                .join(", ");
                            lines.push(format!(
                                "  lam={} gl[{gl_line}] levi (bounds): {line}",
                                f.lam
                            ));
                            let entries: Vec<Value> = cands
                                .iter()
                                .map(|(w, b)| {
                                    let mut v = weight_value(w, lg);
                                    v["max_mult"] = json!(b);
                                    v
                                })
                                .collect();
                            json!({ "stable": false, "bounds": entries })
                        }
                        (None, None) => unreachable!(),
                    };
                    factors.push(json!({ "lam": f.lam.to_string(), "gl": gl, "levi": levi }));
                }
                out.push(
                    json!({ "space": sp.name(), "j": j, "q": q, "factors": factors }),
                    lines,
                );
            }
        }
        Cmd::E1 { group, k, j } => {
            let (family, n, n_hi) = parse_group(&group)?;
            if n != n_hi {
                return Err(Error::Parse("e1 expects a single group".into()));
            }
            let sp = GrassmannianSpace::new(family, k, n)?;
            let g = sp.ambient_group();
            let (j_lo, j_hi, _) = parse_range(&j)?;
            for j in j_lo..=j_hi {
                let page = e1_page(&sp, j)?;
                if !page.taints.is_empty() {
                    out.inexact = true;
                }
                let cells: Vec<Value> = page
                    .cells
                    .iter()
                    .map(|c| {
                        json!({
                            "q": c.q, "i": c.i,
                            "known": multiset_value(&c.known, g),
                            "possible": multiset_value(&c.possible, g),
                        })
                    })
                    .collect();
                let taints: Vec<Value> = page
                    .taints
                    .iter()
                    .map(|t| json!({ "q": t.q, "lam": t.lam.to_string() }))
                    .collect();
                let mut lines = vec![format!(
                    "{} Lambda^{j} T page ({} cells, {} unresolved factors):",
                    sp.name(),
                    page.cells.len(),
                    page.taints.len()
                )];
                for c in &page.cells {
                    let mut line = format!("  q={} i={}  known: {}", c.q, c.i, multiset_table(&c.known, g));
                    if !c.possible.is_empty() {
                        line.push_str(&format!("  possible: {}", multiset_table(&c.possible, g)));
                    }
                    lines.push(line);
                }
                for t in &page.taints {
                    lines.push(format!("  unresolved factor lam={} at q={}", t.lam, t.q));
                }
                out.push(
                    json!({
                        "space": sp.name(), "j": j, "extended": sp.extended(),
                        "cells": cells, "taints": taints,
                    }),
                    lines,
                );
            }
        }
        Cmd::Hh { group, k, l } => {
            let (family, n, n_hi) = parse_group(&group)?;
            if n != n_hi {
                return Err(Error::Parse("hh expects a single group".into()));
            }
            let sp = GrassmannianSpace::new(family, k, n)?;
            let g = sp.ambient_group();
            let (l_lo, l_hi, _) = parse_range(&l)?;
            for l in l_lo..=l_hi {
                let hh = isogr_core::spectral::hochschild(&sp, l)?;
                if hh.status != DegreeStatus::Exact {
                    out.inexact = true;
                }
                let parts: Vec<Value> = hh
                    .parts
                    .iter()
                    .map(|p| {
                        json!({
                            "i": p.i, "j": p.j, "status": status_str(p.bounds.status),
                            "certified": multiset_value(&p.bounds.certified, g),
                            "upper": multiset_value(&p.bounds.upper, g),
                        })
                    })
                    .collect();
                let mut lines = vec![format!(
                    "{} HH^{l}: {} [{}]{}",
                    sp.name(),
                    multiset_table(&hh.certified, g),
                    status_str(hh.status),
                    if hh.extended { " (extended)" } else { "" }
                )];
                for p in &hh.parts {
                    lines.push(format!(
                        "  H^{}(Lambda^{} T): {} [{}]",
                        p.i,
                        p.j,
                        multiset_table(&p.bounds.certified, g),
                        status_str(p.bounds.status)
                    ));
                }
                out.push(
                    json!({
                        "space": sp.name(), "l": l, "extended": hh.extended,
                        "status": status_str(hh.status),
                        "certified": multiset_value(&hh.certified, g),
                        "upper": multiset_value(&hh.upper, g),
                        "parts": parts,
                    }),
                    lines,
                );
            }
        }
        Cmd::Scan { group, k, lmax } => {
            let (family, n, n_hi) = parse_group(&group)?;
            if n != n_hi {
                return Err(Error::Parse("scan expects a single group".into()));
            }
            let sp = GrassmannianSpace::new(family, k, n)?;
            let g = sp.ambient_group();
            // Warm the page cache in parallel; results are memoized, so the
            // sequential scan below is then deterministic and cheap.
            {
                use rayon::prelude::*;
                (0..lmax)
                    .into_par_iter()
                    .map(|j| e1_page(&sp, j).map(drop))
                    .collect::<Result<Vec<()>, Error>>()?;
            }
            let report = globality_scan(&sp, lmax)?;
            match &report.verdict {
                ScanVerdict::NotGlobal { primary, witnesses, note } => {
                    let wit_values: Vec<Value> = witnesses
                        .iter()
                        .map(|w| {
                            json!({
                                "l": w.l, "i": w.i, "j": w.j,
                                "weight": weight_value(&w.weight, g),
                                "certified": w.certified,
                            })
                        })
                        .collect();
                    let mut lines = vec![format!(
                        "{}: NOT_GLOBAL at l={} — H^{}(Lambda^{} T) contains V({}) x{}",
                        sp.name(),
                        primary.l,
                        primary.i,
                        primary.j,
                        weight_table(&primary.weight, g),
                        primary.certified
                    )];
                    for w in witnesses {
                        lines.push(format!(
                            "  witness l={} i={} j={} V({}) x{}",
                            w.l,
                            w.i,
                            w.j,
                            weight_table(&w.weight, g),
                            w.certified
                        ));
                    }
                    lines.push(format!("  note: {note}"));
                    out.push(
                        json!({
                            "space": sp.name(), "l_max": lmax, "verdict": "not_global",
                            "primary": {
                                "l": primary.l, "i": primary.i, "j": primary.j,
                                "weight": weight_value(&primary.weight, g),
                                "certified": primary.certified,
                            },
                            "witnesses": wit_values,
                            "note": note,
                        }),
                        lines,
                    );
                }
                ScanVerdict::GlobalUpTo { l_max, unresolved } => {
                    if !unresolved.is_empty() {
                        out.inexact = true;
                    }
                    let cells: Vec<Value> = unresolved
                        .iter()
                        .map(|u| {
                            json!({
                                "l": u.l, "i": u.i, "j": u.j,
                                "status": status_str(u.status),
                                "upper_total": u.upper_total,
                            })
                        })
                        .collect();
                    let mut lines = vec![format!(
                        "{}: GLOBAL_UP_TO l={l_max} ({} cells not certified to vanish)",
                        sp.name(),
                        unresolved.len()
                    )];
                    for u in unresolved {
                        lines.push(format!(
                            "  unresolved l={} i={} j={} [{}] upper {}",
                            u.l,
                            u.i,
                            u.j,
                            status_str(u.status),
                            u.upper_total
                        ));
                    }
                    out.push(
                        json!({
                            "space": sp.name(), "l_max": l_max, "verdict": "global_up_to",
                            "unresolved": cells,
                        }),
                        lines,
                    );
                }
            }
        }
    }
    Ok(out.finish())
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let strict = cli.strict;
    match run(cli) {
        Ok(inexact) => {
            if strict && inexact {
                std::process::exit(3);
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::OutOfScope(_) => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_specs() {
        assert_eq!(parse_group("C4").unwrap(), (Family::C, 4, 4));
        assert_eq!(parse_group("C4..6").unwrap(), (Family::C, 4, 6));
        assert_eq!(parse_group("B4..B6").unwrap(), (Family::B, 4, 6));
        assert_eq!(parse_group(" D5 ").unwrap(), (Family::D, 5, 5));
        assert!(parse_group("").is_err());
        assert!(parse_group("Ç4").is_err());
        assert!(parse_group("X4").is_err());
        assert!(parse_group("C6..4").is_err());
        assert!(parse_group("C").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap(), (3, 3, false));
        assert_eq!(parse_range("1..4").unwrap(), (1, 4, true));
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn weights_must_be_dominant_for_the_levi() {
        let g = GroupType::new(Family::C, 2).unwrap();
        assert!(parse_weight("[2,1]", g).is_ok());
        assert!(parse_weight("[1,2]", g).is_err());
        assert!(parse_weight("[2,1,0]", g).is_err());
    }
}
