use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::families::{bn_even, bn_odd, dn_even, dn_odd, Family};
use super::{parse_versioned, ElementText, PaperError, StructureRecord};
use crate::perms::{parse_signed, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TraceCase {
    #[serde(rename = "B-even")]
    BEven,
    #[serde(rename = "B-odd")]
    BOdd,
    #[serde(rename = "D-even")]
    DEven,
    #[serde(rename = "D-odd")]
    DOdd,
}

impl TraceCase {
    pub const ALL: [TraceCase; 4] = [TraceCase::BEven, TraceCase::BOdd, TraceCase::DEven, TraceCase::DOdd];

    /// The family record whose elements the table describes (as printed).
    pub fn record(self, n: usize) -> Result<StructureRecord, PaperError> {
        match self {
            TraceCase::BEven => bn_even(n),
            TraceCase::BOdd => bn_odd(n),
            TraceCase::DEven => dn_even(n),
            TraceCase::DOdd => dn_odd(n),
        }
    }

    pub fn family(self) -> Family {
        match self {
            TraceCase::BEven | TraceCase::BOdd => Family::B,
            TraceCase::DEven | TraceCase::DOdd => Family::D,
        }
    }

    /// Smallest valid rank; valid ranks then go up in steps of two.
    pub fn min_rank(self) -> usize {
        match self {
            TraceCase::BEven => 12,
            TraceCase::BOdd | TraceCase::DOdd => 11,
            TraceCase::DEven => 10,
        }
    }

    pub fn accepts(self, n: usize) -> bool {
        n >= self.min_rank() && n % 2 == self.min_rank() % 2
    }
}

impl fmt::Display for TraceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TraceCase::BEven => "B-even",
            TraceCase::BOdd => "B-odd",
            TraceCase::DEven => "D-even",
            TraceCase::DOdd => "D-odd",
        })
    }
}

impl FromStr for TraceCase {
    type Err = PaperError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TraceCase::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| PaperError::Range(format!("unknown case {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceRole {
    X1,
    Y1,
    X1y1,
    X2,
    Y2,
    X2y2,
}

impl TraceRole {
    pub const ALL: [TraceRole; 6] =
        [TraceRole::X1, TraceRole::Y1, TraceRole::X1y1, TraceRole::X2, TraceRole::Y2, TraceRole::X2y2];

    /// The element `x₁`, `y₁`, `x₁y₁`, … of the case's family at rank `n`.
    pub fn element(self, case: TraceCase, n: usize) -> Result<SignedPermutation, PaperError> {
        let r = case.record(n)?;
        let parse = |e: &ElementText| {
            let text = e.cycles().expect("family elements are cycles");
            parse_signed(text, n).map_err(|err| PaperError::Malformed { name: text.into(), message: err.to_string() })
        };
        let e = &r.elements;
        Ok(match self {
            TraceRole::X1 => parse(&e.x1)?,
            TraceRole::Y1 => parse(&e.y1)?,
            TraceRole::X1y1 => parse(&e.x1)?.compose(&parse(&e.y1)?),
            TraceRole::X2 => parse(&e.x2)?,
            TraceRole::Y2 => parse(&e.y2)?,
            TraceRole::X2y2 => parse(&e.x2)?.compose(&parse(&e.y2)?),
        })
    }
}

impl fmt::Display for TraceRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TraceRole::X1 => "x1",
            TraceRole::Y1 => "y1",
            TraceRole::X1y1 => "x1y1",
            TraceRole::X2 => "x2",
            TraceRole::Y2 => "y2",
            TraceRole::X2y2 => "x2y2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// One line of a table. `[a, b]` stands for `a·n + b`. A rule applies when
/// all its present conditions hold; the first applicable rule wins.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceRule {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Parity>,
    pub value: [i64; 2],
}

impl TraceRule {
    fn applies(&self, n: i64, r: i64) -> bool {
        self.r.is_none_or(|[a, b]| a * n + b == r)
            && self.parity.is_none_or(|p| (r % 2 == 0) == (p == Parity::Even))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct TraceTable {
    pub family: Family,
    pub parity: Parity,
    pub min_rank: usize,
    pub roles: BTreeMap<TraceRole, Vec<TraceRule>>,
}

impl TraceTable {
    /// Closed-form trace of the `r`-th power, without range checks.
    pub fn value(&self, role: TraceRole, n: usize, r: u64) -> Option<i64> {
        let (n, r) = (n as i64, r as i64);
        self.roles.get(&role)?.iter().find(|rule| rule.applies(n, r)).map(|rule| rule.value[0] * n + rule.value[1])
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct TraceFile {
    #[allow(dead_code)]
    schema_version: u32,
    cases: BTreeMap<TraceCase, TraceTable>,
}

pub(super) fn parse_tables(text: &str) -> Result<BTreeMap<TraceCase, TraceTable>, PaperError> {
    let file: TraceFile = parse_versioned("traces.json", text)?;
    for case in TraceCase::ALL {
        let t = file
            .cases
            .get(&case)
            .ok_or_else(|| PaperError::Data { file: "traces.json".into(), message: format!("missing case {case}") })?;
        let parity = if case.min_rank() % 2 == 0 { Parity::Even } else { Parity::Odd };
        if t.family != case.family() || t.min_rank != case.min_rank() || t.parity != parity {
            return Err(PaperError::Data { file: "traces.json".into(), message: format!("header of {case} disagrees") });
        }
    }
    Ok(file.cases)
}

/// Closed-form trace of the `r`-th power of `role` in `case` at rank `n`,
/// for `1 ≤ r <` the order of the element.
pub fn trace_oracle(case: TraceCase, role: TraceRole, n: usize, r: u64) -> Result<i64, PaperError> {
    if !case.accepts(n) {
        return Err(PaperError::Range(format!("{case} is not defined at n = {n}")));
    }
    let order = role.element(case, n)?.order();
    if r == 0 || r >= order {
        return Err(PaperError::Range(format!("r = {r} outside 1..{order} for {role} at n = {n}")));
    }
    let tables = super::trace_tables()?;
    tables[&case]
        .value(role, n, r)
        .ok_or_else(|| PaperError::Data { file: "traces.json".into(), message: format!("no rule for {case} {role} r = {r}") })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(trace_oracle(TraceCase::BEven, TraceRole::X1, 12, 11).unwrap(), 10);
        assert_eq!(trace_oracle(TraceCase::DOdd, TraceRole::Y1, 11, 3).unwrap(), 1);
        assert_eq!(trace_oracle(TraceCase::BOdd, TraceRole::X2y2, 13, 8).unwrap(), -3);
        assert!(trace_oracle(TraceCase::BEven, TraceRole::X1, 13, 1).is_err());
        assert!(trace_oracle(TraceCase::BEven, TraceRole::Y1, 12, 0).is_err());
        assert!(trace_oracle(TraceCase::BEven, TraceRole::Y1, 12, 10).is_err());
    }
}
