use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use beauville_core::beauville::search::{search_strategy, SearchConfig, SearchVerdict};
use beauville_core::beauville::{sigma_strategy, BeauvilleError, SigmaStrategy, SCHEMA_VERSION};
use beauville_core::groups::{GroupDescriptor, RealizedGroup};
use beauville_core::mixed::{characters, mixable_obstruction, order_mod4_obstruction, Mixable, Mod4};
use beauville_core::paperdata::{
    paper_product, paper_structure, trace_tables, verify_record, RecordVerdict, StructureRecord, TraceCase, TraceRole,
    DATA_SCHEMA_VERSION,
};

use crate::{CliError, Outcome, SigmaFlags};

/// `B12`, `I2(7)`, or a product of two irreducible types such as `H3xH3`.
pub fn parse_descriptor(s: &str) -> Result<GroupDescriptor, CliError> {
    match s.split_once('x') {
        Some((a, b)) => Ok(GroupDescriptor::Product(a.trim().parse()?, b.trim().parse()?)),
        None => Ok(GroupDescriptor::Coxeter(s.trim().parse()?)),
    }
}

pub fn build_group(d: GroupDescriptor) -> Result<RealizedGroup, CliError> {
    Ok(match d {
        GroupDescriptor::Coxeter(t) => RealizedGroup::build_coxeter(t)?,
        GroupDescriptor::Product(a, b) => {
            RealizedGroup::direct_product(&RealizedGroup::build_coxeter(a)?, &RealizedGroup::build_coxeter(b)?)?
        }
    })
}

pub fn strategy(flags: SigmaFlags) -> Option<Box<dyn SigmaStrategy>> {
    flags.name().map(|n| sigma_strategy(n).expect("registered strategy"))
}

fn read_record(path: &Path, group: GroupDescriptor) -> Result<StructureRecord, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    let bad = |e: serde_json::Error| CliError::Config(format!("{}: {e}", path.display()));
    let value: Value = serde_json::from_str(&text).map_err(bad)?;
    // A whole catalogue file is accepted too; its first record for the group is used.
    if let Some(records) = value.get("records") {
        if value.get("schemaVersion").and_then(Value::as_u64) != Some(u64::from(DATA_SCHEMA_VERSION)) {
            return Err(CliError::Config(format!("{}: unsupported schemaVersion", path.display())));
        }
        let records: Vec<StructureRecord> = serde_json::from_value(records.clone()).map_err(bad)?;
        return records
            .into_iter()
            .find(|r| parse_descriptor(&r.group).is_ok_and(|d| d == group))
            .ok_or_else(|| CliError::Config(format!("{}: no record for {group}", path.display())));
    }
    serde_json::from_value(value).map_err(bad)
}

pub fn verify(group: &str, paper: bool, file: Option<&Path>, sigma: SigmaFlags) -> Result<Outcome, CliError> {
    let d = parse_descriptor(group)?;
    let rec = match (paper, file) {
        (true, _) => match d {
            GroupDescriptor::Coxeter(t) => paper_structure(t)?,
            GroupDescriptor::Product(..) => paper_product(&d.to_string())?,
        },
        (false, Some(path)) => read_record(path, d)?,
        (false, None) => return Err(CliError::Config("one of --paper or --file is required".into())),
    };
    if parse_descriptor(&rec.group)? != d {
        return Err(CliError::Config(format!("record {} is for {}, not {d}", rec.id, rec.group)));
    }
    let s = strategy(sigma);
    let outcome = verify_record(&rec, s.as_deref())?;
    let code = match outcome.verdict {
        RecordVerdict::Pass => 0,
        RecordVerdict::Fail => 1,
        RecordVerdict::Malformed => 2,
        RecordVerdict::Inconclusive => 3,
    };
    Ok(Outcome { code, json: outcome.to_json(), human: None })
}

pub fn search(
    group: &str,
    exhaustive: bool,
    budget: Option<u64>,
    bound: u64,
    seed: u64,
    workers: usize,
) -> Result<Outcome, CliError> {
    if bound == 0 {
        return Err(CliError::Config("--bound must be positive".into()));
    }
    let g = build_group(parse_descriptor(group)?)?;
    let name = if exhaustive { "exhaustive" } else { "randomized" };
    let cfg = SearchConfig { bound, budget: budget.unwrap_or(0), seed, workers, strongly_real: true };
    let out = match search_strategy(name).expect("registered strategy").search(&g, &cfg) {
        Ok(out) => out,
        // The group is larger than the enumeration may go: a configuration problem.
        Err(BeauvilleError::Bound(m)) => return Err(CliError::Config(format!("bound exceeded: {m}"))),
        Err(e) => return Err(e.into()),
    };
    let code = match out.verdict {
        SearchVerdict::Found => 0,
        SearchVerdict::NoneExists => 1,
        SearchVerdict::Exhausted => 3,
    };
    let mut json = out.to_json();
    json["group"] = json!(g.descriptor().to_string());
    json["seed"] = json!(seed);
    Ok(Outcome { code, json, human: None })
}

/// `12` or `12..20` (inclusive); both ends must be valid ranks for `case`.
fn parse_ranks(case: TraceCase, s: &str) -> Result<(usize, usize), CliError> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| CliError::Config(format!("bad rank {t:?}")));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    for n in [lo, hi] {
        if !case.accepts(n) {
            return Err(CliError::Config(format!(
                "{case} needs {} ranks n >= {}; got {n}",
                if case.min_rank().is_multiple_of(2) { "even" } else { "odd" },
                case.min_rank()
            )));
        }
    }
    if lo > hi {
        return Err(CliError::Config(format!("empty range {s}")));
    }
    Ok((lo, hi))
}

pub fn tables(case: &str, ranks: &str) -> Result<Outcome, CliError> {
    let case: TraceCase = case.parse()?;
    let (lo, hi) = parse_ranks(case, ranks)?;
    let table = trace_tables()?.remove(&case).expect("every case is present");
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut human = String::new();
    let mut checked = 0u64;
    for n in (lo..=hi).step_by(2) {
        for role in TraceRole::ALL {
            let e = role.element(case, n)?;
            let mut p = e.clone();
            let mut computed = Vec::new();
            let mut expected = Vec::new();
            for r in 1..e.order() {
                let want = table.value(role, n, r);
                if want != Some(p.trace()) {
                    mismatches.push(json!({ "n": n, "role": role, "r": r, "computed": p.trace(), "expected": want }));
                }
                computed.push(p.trace());
                expected.push(want);
                checked += 1;
                p = p.compose(&e);
            }
            let bad = computed.iter().zip(&expected).any(|(c, w)| Some(*c) != *w);
            let line: Vec<String> = computed.iter().map(i64::to_string).collect();
            let _ = writeln!(human, "n={n:<3} {role:<5} {}  {}", line.join(" "), if bad { "MISMATCH" } else { "ok" });
            if bad {
                let line: Vec<String> = computed
                    .iter()
                    .zip(&expected)
                    .map(|(c, w)| match w {
                        Some(w) if w == c => ".".repeat(c.to_string().len()),
                        Some(w) => format!("*{w}"),
                        None => "*?".into(),
                    })
                    .collect();
                let _ = writeln!(human, "{:<10}{}", "", line.join(" "));
            }
            rows.push(json!({ "n": n, "role": role, "order": e.order(), "traces": computed }));
        }
    }
    let _ = writeln!(human, "{case} n={lo}..{hi}: {checked} powers, {} mismatches", mismatches.len());
    let json = json!({
        "schemaVersion": SCHEMA_VERSION,
        "case": case,
        "ranks": [lo, hi],
        "checked": checked,
        "mismatches": mismatches,
        "rows": rows,
    });
    let code = if mismatches.is_empty() { 0 } else { 1 };
    Ok(Outcome { code, json, human: Some(human) })
}

pub fn mixed_json(g: &RealizedGroup, bound: u64) -> Result<(bool, Value), BeauvilleError> {
    let mut all_blocked = true;
    let mut rows = Vec::new();
    for chi in characters(g) {
        let result = order_mod4_obstruction(g, &chi, bound)?;
        all_blocked &= matches!(result, Mod4::Blocked { .. });
        let values: Vec<i8> = chi.values.iter().map(|&v| if v { -1 } else { 1 }).collect();
        rows.push(json!({ "values": values, "kernelOrder": chi.kernel.order().to_string(), "obstruction": result }));
    }
    Ok((
        all_blocked,
        json!({
            "schemaVersion": SCHEMA_VERSION,
            "group": g.descriptor().to_string(),
            "order": g.expected_order().to_string(),
            "blocked": all_blocked,
            "characters": rows,
        }),
    ))
}

pub fn mixed(group: &str, bound: u64) -> Result<Outcome, CliError> {
    let g = build_group(parse_descriptor(group)?)?;
    let (blocked, json) = mixed_json(&g, bound)?;
    Ok(Outcome { code: if blocked { 0 } else { 1 }, json, human: None })
}

pub fn mixable_json(g: &RealizedGroup, bound: u64) -> Result<(bool, Value), BeauvilleError> {
    let result = mixable_obstruction(g, bound)?;
    let blocked = matches!(result, Mixable::Blocked { .. });
    Ok((
        blocked,
        json!({
            "schemaVersion": SCHEMA_VERSION,
            "group": g.descriptor().to_string(),
            "order": g.expected_order().to_string(),
            "blocked": blocked,
            "obstruction": result,
        }),
    ))
}

pub fn mixable(group: &str, bound: u64) -> Result<Outcome, CliError> {
    let g = build_group(parse_descriptor(group)?)?;
    let (blocked, json) = mixable_json(&g, bound)?;
    Ok(Outcome { code: if blocked { 0 } else { 1 }, json, human: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use beauville_core::groups::CoxeterType;

    #[test]
    fn descriptors() {
        assert_eq!(parse_descriptor("B12").unwrap(), GroupDescriptor::Coxeter(CoxeterType::B(12)));
        assert_eq!(
            parse_descriptor("A4xI2(3)").unwrap(),
            GroupDescriptor::Product(CoxeterType::A(4), CoxeterType::I2(3))
        );
        assert!(parse_descriptor("Q8").is_err());
    }

    #[test]
    fn rank_ranges() {
        assert_eq!(parse_ranks(TraceCase::BEven, "12..20").unwrap(), (12, 20));
        assert_eq!(parse_ranks(TraceCase::DOdd, "11..=21").unwrap(), (11, 21));
        assert!(parse_ranks(TraceCase::BEven, "13").is_err());
        assert!(parse_ranks(TraceCase::BEven, "10").is_err());
        assert!(parse_ranks(TraceCase::DEven, "20..10").is_err());
    }
}
