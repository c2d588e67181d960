use std::fmt;
use std::time::Instant;

use serde_json::{json, Value};

use crate::bijections::{
    modify, modify_letters, ncpartition_to_perm231, perm231_to_ncpartition, perm312_to_seq101, phi,
    phi_inverse, restricted_to_021, rgf_decode, rgf_encode, seq021_to_restricted, seq101_to_perm312,
    seq102_to_ternary, ternary_to_seq102, unmodify,
};
use crate::enumerate::rule::{Restricted, Unrestricted};
use crate::enumerate::{
    avoiders, count_avoiders_with, count_matching, count_modified_avoiders_with, generate_ascent_sequences,
    generate_restricted, modified_avoiders, perm_avoiders, CountOptions, CountSeries, Histogram,
};
use crate::error::Error;
use crate::oracles::{patterns_up_to, run_conjecture, wilf_classify, ConjectureId};
use crate::partition::SetPartition;
use crate::pattern::{avoids, is_normalized, normalize_pattern, Pattern};
use crate::perm::Permutation;
use crate::sequence::{AscentSequence, RestrictedAscentSequence};
use crate::word::{asc, des, format_letters, parse_letters, Letter, Statistic, TernaryWord};

use super::args::{BijectionArgs, ConjecturesArgs, CountArgs, DistArgs, ListArgs, SetArgs, TableArgs, WilfArgs};
use super::fixtures::reference_rows;
use super::output::{big, object, params, Report, Status};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
    /// Refused before starting because the request is too large.
    Budget(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Usage(e.to_string()),
            e => CliError::Domain(e),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Budget(m) => f.write_str(m),
            CliError::Domain(e) => e.fmt(f),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Settings shared by every command.
pub struct Ctx {
    pub opts: CountOptions,
    pub max_n: usize,
    pub budget_seconds: u64,
}

impl Ctx {
    fn check_n(&self, n: usize) -> CliResult<()> {
        if n == 0 {
            return Err(CliError::Usage("lengths start at 1".into()));
        }
        if n > self.max_n {
            return Err(CliError::Budget(format!(
                "refusing n = {n}: above --max-n {}; exhaustive enumeration grows exponentially, \
                 raise --max-n to run it anyway",
                self.max_n
            )));
        }
        Ok(())
    }

    fn expired(&self) -> bool {
        self.opts.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn incomplete(&self, report: &mut Report) {
        report.status = Status::Incomplete;
        report.notes.push(format!(
            "budget of {} s spent: results are partial",
            self.budget_seconds
        ));
    }
}

/// Digit-string pattern from the command line. Unlike the library, the CLI
/// refuses patterns that are not already normalized.
fn cli_pattern(s: &str) -> CliResult<Pattern> {
    let s = s.trim();
    if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
        return Err(CliError::Usage(format!("pattern {s:?} must be a nonempty digit string")));
    }
    let letters = parse_letters(s)?;
    if !is_normalized(&letters) {
        let fixed = normalize_pattern(&letters)?;
        return Err(CliError::Usage(format!(
            "pattern {s} is not normalized; the same pattern is written {fixed}"
        )));
    }
    Ok(Pattern::new(letters)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SetKind {
    All,
    Avoiders,
    Modified,
    Perm,
    Restricted,
}

/// A set to enumerate, with extra patterns applied as filters.
struct SetSpec {
    kind: SetKind,
    first: Option<Pattern>,
    extras: Vec<Pattern>,
}

impl SetSpec {
    fn from_args(a: &SetArgs) -> CliResult<Self> {
        let mut patterns = a.patterns.iter().map(|s| cli_pattern(s)).collect::<CliResult<Vec<_>>>()?;
        let kind = if a.restricted {
            SetKind::Restricted
        } else if a.perm {
            SetKind::Perm
        } else if a.modified {
            SetKind::Modified
        } else if patterns.is_empty() {
            SetKind::All
        } else {
            SetKind::Avoiders
        };
        let first = match kind {
            SetKind::All | SetKind::Restricted => None,
            _ if patterns.is_empty() => {
                return Err(CliError::Usage("--perm and --modified need a --pattern".into()));
            }
            _ => Some(patterns.remove(0)),
        };
        if let (SetKind::Perm, Some(p)) = (kind, &first) {
            if !p.has_distinct_letters() {
                return Err(CliError::Usage(format!(
                    "permutation pattern {p} must have distinct letters"
                )));
            }
        }
        Ok(SetSpec {
            kind,
            first,
            extras: patterns,
        })
    }

    fn describe(&self) -> String {
        let base = match (self.kind, &self.first) {
            (SetKind::All, _) => "all".to_string(),
            (SetKind::Restricted, _) => "restricted".to_string(),
            (SetKind::Avoiders, Some(p)) => format!("avoiders:{p}"),
            (SetKind::Modified, Some(p)) => format!("modified-avoiders:{p}"),
            (SetKind::Perm, Some(p)) => format!("perm-avoiders:{p}"),
            _ => unreachable!("pattern checked in from_args"),
        };
        let extras: Vec<String> = self.extras.iter().map(|p| p.to_string()).collect();
        if extras.is_empty() {
            base
        } else {
            format!("{base}+{}", extras.join("+"))
        }
    }

    fn members(&self, n: usize) -> CliResult<Box<dyn Iterator<Item = Member>>> {
        let first = self.first.clone();
        let it: Box<dyn Iterator<Item = Member>> = match self.kind {
            SetKind::All => Box::new(generate_ascent_sequences(n)?.map(Member::plain)),
            SetKind::Avoiders => Box::new(avoiders(first.as_ref().unwrap(), n)?.map(Member::plain)),
            SetKind::Restricted => Box::new(generate_restricted(n)?.map(|x| Member::plain(x.as_ascent_sequence().clone()))),
            SetKind::Perm => Box::new(perm_avoiders(first.as_ref().unwrap(), n)?.map(|pi| Member {
                shown: pi.to_string(),
                modified: None,
                word: pi.into_entries(),
            })),
            SetKind::Modified => Box::new(modified_avoiders(first.as_ref().unwrap(), n)?.map(|x| {
                let m = modify_letters(&x);
                Member {
                    shown: x.to_string(),
                    modified: Some(format_letters(&m)),
                    word: m,
                }
            })),
        };
        if self.extras.is_empty() {
            return Ok(it);
        }
        let extras = self.extras.clone();
        Ok(Box::new(it.filter(move |m| extras.iter().all(|q| avoids(&m.word, q)))))
    }

    /// Visits members of length `n` until the deadline; false if cut short.
    fn walk(&self, n: usize, ctx: &Ctx, mut visit: impl FnMut(Member)) -> CliResult<bool> {
        for (i, m) in self.members(n)?.enumerate() {
            if i % 1024 == 0 && ctx.expired() {
                return Ok(false);
            }
            visit(m);
        }
        Ok(true)
    }
}

struct Member {
    shown: String,
    modified: Option<String>,
    /// Letters that filters and statistics apply to.
    word: Vec<Letter>,
}

impl Member {
    fn plain(x: AscentSequence) -> Self {
        Member {
            shown: x.to_string(),
            modified: None,
            word: x.into_word().into_letters(),
        }
    }
}

pub fn count(a: &CountArgs, ctx: &Ctx) -> CliResult<Report> {
    let spec = SetSpec::from_args(&a.set)?;
    let (lo, hi) = a.n;
    ctx.check_n(hi)?;
    let label = spec.describe();
    let series = if spec.extras.is_empty() && spec.kind != SetKind::Perm {
        let p = spec.first.as_ref();
        match spec.kind {
            SetKind::All => count_matching(Unrestricted, label.clone(), hi, &ctx.opts)?,
            SetKind::Restricted => count_matching(Restricted::default(), label.clone(), hi, &ctx.opts)?,
            SetKind::Avoiders => count_avoiders_with(p.unwrap(), hi, &ctx.opts)?,
            SetKind::Modified => count_modified_avoiders_with(p.unwrap(), hi, &ctx.opts)?,
            SetKind::Perm => unreachable!(),
        }
    } else {
        let mut values = Vec::with_capacity(hi);
        let mut complete = true;
        for n in 1..=hi {
            let mut k: u64 = 0;
            if complete {
                complete = spec.walk(n, ctx, |_| k += 1)?;
            }
            values.push(k.into());
        }
        let mut cs = CountSeries::new(label.clone(), values);
        cs.complete = complete;
        cs
    };
    let counts: Vec<Value> = (lo..=hi)
        .map(|n| json!({"n": n, "count": big(series.get(n).unwrap())}))
        .collect();
    let mut report = Report::new(
        "count",
        params([("set", json!(label)), ("n", json!([lo, hi]))]),
        json!({"complete": series.complete, "counts": counts}),
        &["n", "count"],
    );
    for n in lo..=hi {
        report.rows.push(vec![n.to_string(), series.get(n).unwrap().to_string()]);
    }
    if !series.complete {
        ctx.incomplete(&mut report);
    }
    Ok(report)
}

pub fn list(a: &ListArgs, ctx: &Ctx) -> CliResult<Report> {
    let spec = SetSpec::from_args(&a.set)?;
    ctx.check_n(a.n)?;
    let mut members = Vec::new();
    let complete = spec.walk(a.n, ctx, |m| members.push(m))?;
    let modified = spec.kind == SetKind::Modified;
    let items: Vec<Value> = members
        .iter()
        .map(|m| match &m.modified {
            Some(w) => json!({"sequence": m.shown, "modified": w}),
            None => json!(m.shown),
        })
        .collect();
    let header: &[&str] = if modified { &["sequence", "modified"] } else { &["sequence"] };
    let mut report = Report::new(
        "list",
        params([("set", json!(spec.describe())), ("n", json!(a.n))]),
        json!({"complete": complete, "count": members.len(), "sequences": items}),
        header,
    );
    for m in members {
        let mut row = vec![m.shown];
        row.extend(m.modified);
        report.rows.push(row);
    }
    if !complete {
        ctx.incomplete(&mut report);
    }
    Ok(report)
}

pub fn dist(a: &DistArgs, ctx: &Ctx) -> CliResult<Report> {
    let spec = SetSpec::from_args(&a.set)?;
    ctx.check_n(a.n)?;
    let stats = a
        .stats
        .iter()
        .map(|s| s.parse::<Statistic>().map_err(|e| CliError::Usage(e.to_string())))
        .collect::<CliResult<Vec<_>>>()?;
    if stats.is_empty() {
        return Err(CliError::Usage("--stats needs at least one statistic".into()));
    }
    let mut hist = Histogram::new(stats.clone());
    let complete = spec.walk(a.n, ctx, |m| hist.add(&m.word))?;
    let names: Vec<&str> = stats.iter().map(|s| s.name()).collect();
    let cells: Vec<Value> = hist
        .cells
        .iter()
        .map(|(k, c)| json!({"key": k, "count": c}))
        .collect();
    let mut header = names.clone();
    header.push("count");
    let mut report = Report::new(
        "dist",
        params([
            ("set", json!(spec.describe())),
            ("n", json!(a.n)),
            ("stats", json!(names)),
        ]),
        json!({"complete": complete, "total": hist.total(), "cells": cells}),
        &header,
    );
    for (k, c) in &hist.cells {
        let mut row: Vec<String> = k.iter().map(|v| v.to_string()).collect();
        row.push(c.to_string());
        report.rows.push(row);
    }
    if !complete {
        ctx.incomplete(&mut report);
    }
    Ok(report)
}

/// Forward and inverse names of every map.
pub const MAPS: [(&str, &str); 7] = [
    ("seq101-to-perm312", "perm312-to-seq101"),
    ("seq102-to-ternary", "ternary-to-seq102"),
    ("restricted-to-021", "seq021-to-restricted"),
    ("phi", "phi-inverse"),
    ("perm231-to-ncpartition", "ncpartition-to-perm231"),
    ("rgf-encode", "rgf-decode"),
    ("modify", "unmodify"),
];

fn resolve_map(name: &str, inverse: bool) -> CliResult<(usize, bool)> {
    for (i, (fwd, inv)) in MAPS.iter().enumerate() {
        if name == *fwd {
            return Ok((i, inverse));
        }
        if name == *inv {
            return Ok((i, !inverse));
        }
    }
    let known: Vec<&str> = MAPS.iter().flat_map(|(a, b)| [*a, *b]).collect();
    Err(CliError::Usage(format!(
        "unknown map {name:?}; known maps: {}",
        known.join(", ")
    )))
}

fn distinct(w: &[Letter]) -> usize {
    let mut v = w.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

pub fn bijection(a: &BijectionArgs) -> CliResult<Report> {
    let (idx, inverse) = resolve_map(a.name.trim(), a.inverse)?;
    let name = if inverse { MAPS[idx].1 } else { MAPS[idx].0 };
    let input = a.input.trim();
    let (output, stats): (String, Vec<(&str, usize)>) = match (idx, inverse) {
        (0, false) => {
            let x = parse_letters(input)?;
            let pi = seq101_to_perm312(&x)?;
            (pi.to_string(), vec![("asc(input)", asc(&x)), ("asc(output)", asc(&pi))])
        }
        (0, true) => {
            let pi: Permutation = input.parse()?;
            let x = perm312_to_seq101(&pi)?;
            (x.to_string(), vec![("asc(input)", asc(&pi)), ("asc(output)", asc(&x))])
        }
        (1, false) => {
            let x = parse_letters(input)?;
            let t = seq102_to_ternary(&x)?;
            let stats = vec![
                ("length(input)", x.len()),
                ("length(output)", t.letters().len()),
                ("twos(output)", t.twos()),
            ];
            (t.to_string(), stats)
        }
        (1, true) => {
            let t: TernaryWord = input.parse()?;
            let x = ternary_to_seq102(&t)?;
            let stats = vec![
                ("length(input)", t.letters().len()),
                ("twos(input)", t.twos()),
                ("length(output)", x.len()),
            ];
            (x.to_string(), stats)
        }
        (2, false) => {
            let x: RestrictedAscentSequence = input.parse()?;
            let y = restricted_to_021(&x);
            (y.to_string(), vec![("asc(input)", asc(&x)), ("asc(output)", asc(&y))])
        }
        (2, true) => {
            let y = parse_letters(input)?;
            let x = seq021_to_restricted(&y)?;
            (x.to_string(), vec![("asc(input)", asc(&y)), ("asc(output)", asc(&x))])
        }
        (3, false) => {
            let x: RestrictedAscentSequence = input.parse()?;
            let pi = phi(&x);
            (pi.to_string(), vec![("asc(input)", asc(&x)), ("des(output)", des(&pi))])
        }
        (3, true) => {
            let pi: Permutation = input.parse()?;
            let x = phi_inverse(&pi)?;
            (x.to_string(), vec![("des(input)", des(&pi)), ("asc(output)", asc(&x))])
        }
        (4, false) => {
            let pi: Permutation = input.parse()?;
            let sp = perm231_to_ncpartition(&pi)?;
            let stats = vec![("asc(input)", asc(&pi)), ("blocks(output)", sp.num_blocks())];
            (sp.to_string(), stats)
        }
        (4, true) => {
            let sp: SetPartition = input.parse()?;
            let pi = ncpartition_to_perm231(&sp)?;
            let stats = vec![("blocks(input)", sp.num_blocks()), ("asc(output)", asc(&pi))];
            (pi.to_string(), stats)
        }
        (5, false) => {
            let sp: SetPartition = input.parse()?;
            let w = rgf_encode(&sp);
            let stats = vec![("blocks(input)", sp.num_blocks()), ("distinct(output)", distinct(&w))];
            (w.to_string(), stats)
        }
        (5, true) => {
            let w = parse_letters(input)?;
            let sp = rgf_decode(&w)?;
            let stats = vec![("distinct(input)", distinct(&w)), ("blocks(output)", sp.num_blocks())];
            (sp.to_string(), stats)
        }
        (6, false) => {
            let x: AscentSequence = input.parse()?;
            let m = modify(&x);
            (m.to_string(), vec![("asc(input)", asc(&x)), ("asc(output)", asc(&m))])
        }
        (6, true) => {
            let w = parse_letters(input)?;
            let x = unmodify(&w)?;
            (x.to_string(), vec![("asc(input)", asc(&w)), ("asc(output)", asc(&x))])
        }
        _ => unreachable!("index from MAPS"),
    };
    let mut report = Report::new(
        "bijection",
        params([("name", json!(name)), ("input", json!(input))]),
        json!({
            "output": output,
            "statistics": object(stats.iter().map(|(k, v)| (*k, json!(v)))),
        }),
        &["field", "value"],
    );
    report.rows.push(vec!["map".into(), name.into()]);
    report.rows.push(vec!["input".into(), input.into()]);
    report.rows.push(vec!["output".into(), output]);
    for (k, v) in stats {
        report.rows.push(vec![k.into(), v.to_string()]);
    }
    Ok(report)
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn wilf(a: &WilfArgs, ctx: &Ctx) -> CliResult<Report> {
    ctx.check_n(a.nmax)?;
    let patterns = if a.patterns.is_empty() {
        if !(1..=5).contains(&a.max_len) {
            return Err(CliError::Usage("--max-len must be between 1 and 5".into()));
        }
        patterns_up_to(a.max_len)
    } else {
        a.patterns.iter().map(|s| cli_pattern(s)).collect::<CliResult<Vec<_>>>()?
    };
    let r = wilf_classify(&patterns, a.nmax, &ctx.opts)?;
    let classes: Vec<Value> = r
        .classes
        .iter()
        .zip(&r.series)
        .map(|(c, s)| {
            json!({
                "patterns": c.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "counts": s.values().iter().map(big).collect::<Vec<_>>(),
            })
        })
        .collect();
    let separations: Vec<Value> = r
        .separations
        .iter()
        .map(|s| json!({"left": s.left.to_string(), "right": s.right.to_string(), "n": s.n}))
        .collect();
    let mut report = Report::new(
        "wilf",
        params([
            ("patterns", json!(joined(&patterns, " "))),
            ("nmax", json!(a.nmax)),
        ]),
        json!({"complete": r.complete, "classes": classes, "separations": separations}),
        &["class", "patterns", "counts"],
    );
    for (i, (c, s)) in r.classes.iter().zip(&r.series).enumerate() {
        report.rows.push(vec![(i + 1).to_string(), joined(c, " "), s.to_string()]);
    }
    if !r.complete {
        ctx.incomplete(&mut report);
    }
    Ok(report)
}

pub fn table(a: &TableArgs, ctx: &Ctx) -> CliResult<Report> {
    ctx.check_n(a.nmax)?;
    let mut rows_json = Vec::new();
    let mut rows = Vec::new();
    let mut any_mismatch = false;
    let mut complete = true;
    for row in reference_rows() {
        for ps in &row.patterns {
            let p: Pattern = cli_pattern(ps)?;
            let cs = count_avoiders_with(&p, a.nmax, &ctx.opts)?;
            complete &= cs.complete;
            let checked = a.nmax.min(row.values.len());
            let computed = cs.to_u64();
            let mismatch = (1..=checked).find(|&n| computed[n - 1] != row.values[n - 1]);
            let status = match (cs.complete, mismatch) {
                (false, _) => "incomplete".to_string(),
                (true, Some(n)) => format!("MISMATCH at n={n}"),
                (true, None) => format!("match n<={checked}"),
            };
            any_mismatch |= cs.complete && mismatch.is_some();
            rows.push(vec![
                ps.clone(),
                row.oeis.clone().unwrap_or_else(|| "-".into()),
                cs.to_string(),
                status,
            ]);
            rows_json.push(json!({
                "pattern": ps,
                "oeis": row.oeis,
                "counts": cs.values().iter().map(big).collect::<Vec<_>>(),
                "checked_up_to": checked,
                "first_mismatch": mismatch,
            }));
        }
    }
    let mut report = Report::new(
        "table",
        params([("nmax", json!(a.nmax))]),
        json!({"complete": complete, "matches": !any_mismatch, "rows": rows_json}),
        &["pattern", "oeis", "counts", "status"],
    );
    report.rows = rows;
    if any_mismatch {
        report.status = Status::Mismatch;
        report.notes.push("computed counts differ from the reference table".into());
    } else if !complete {
        ctx.incomplete(&mut report);
    }
    Ok(report)
}

pub fn conjectures(a: &ConjecturesArgs, ctx: &Ctx) -> CliResult<Report> {
    let ids = if a.ids.is_empty() {
        ConjectureId::ALL.to_vec()
    } else {
        a.ids
            .iter()
            .map(|s| s.parse::<ConjectureId>().map_err(|e| CliError::Usage(e.to_string())))
            .collect::<CliResult<Vec<_>>>()?
    };
    let mut runs = Vec::new();
    let mut rows = Vec::new();
    let (mut all_hold, mut complete) = (true, true);
    for id in ids {
        let n_max = a.nmax.unwrap_or_else(|| id.default_n_max());
        ctx.check_n(n_max)?;
        let r = run_conjecture(id, n_max, &ctx.opts)?;
        complete &= r.complete;
        all_hold &= r.verdicts.iter().all(|v| v.holds());
        let verdicts: Vec<Value> = r
            .verdicts
            .iter()
            .map(|v| {
                json!({
                    "n": v.n,
                    "holds": v.holds(),
                    "observed": object(v.observed.iter().map(|(k, x)| (k.clone(), big(x)))),
                    "witness": v.failure.as_ref().map(|w| w.to_string()),
                })
            })
            .collect();
        runs.push(json!({
            "id": id.name(),
            "n_max": n_max,
            "holds": r.holds(),
            "complete": r.complete,
            "verdicts": verdicts,
        }));
        for v in &r.verdicts {
            let verdict = match &v.failure {
                None => "holds".to_string(),
                Some(w) => format!("fails: {w}"),
            };
            let observed = joined(v.observed.iter().map(|(k, x)| format!("{k}={x}")), " ");
            rows.push(vec![id.name().to_string(), v.n.to_string(), verdict, observed]);
        }
    }
    let mut report = Report::new(
        "conjectures",
        params([("nmax", json!(a.nmax)), ("ids", json!(a.ids))]),
        json!({"complete": complete, "holds": all_hold && complete, "runs": runs}),
        &["id", "n", "verdict", "observed"],
    );
    report.rows = rows;
    if !all_hold {
        report.status = Status::Mismatch;
        report.notes.push("at least one conjecture check failed".into());
    } else if !complete {
        ctx.incomplete(&mut report);
    }
    Ok(report)
}
