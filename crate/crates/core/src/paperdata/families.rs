use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ElementText, Elements, Expect, Notation, Origin, PaperError, Status, StructureRecord};
use crate::perms::{format_signed, parse_signed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = PaperError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            _ => Err(PaperError::Range(format!("family {s:?} is not B or D"))),
        }
    }
}

fn cycle(points: impl IntoIterator<Item = usize>) -> String {
    let p: Vec<String> = points.into_iter().map(|k| k.to_string()).collect();
    format!("({})", p.join(","))
}

fn neg(points: &[usize]) -> String {
    points.iter().map(|k| format!("(_{k})")).collect()
}

fn t(a: usize, b: usize) -> String {
    format!("({a},{b})")
}

/// `(a, s−a)(a+1, s−a−1)…` while the first point is the smaller.
fn pairs(sum: usize, from: usize) -> String {
    (from..).take_while(|&a| a < sum - a).map(|a| t(a, sum - a)).collect()
}

fn check(family: Family, n: usize, even: bool, min: usize) -> Result<(), PaperError> {
    if n % 2 == usize::from(!even) && n >= min {
        return Ok(());
    }
    let parity = if even { "even" } else { "odd" };
    Err(PaperError::Range(format!("{family}{n}: this family needs {parity} n ≥ {min}")))
}

fn family_record(
    group: String,
    id: &str,
    status: Status,
    expect: Expect,
    el: [String; 6],
    note: Option<&str>,
) -> StructureRecord {
    let [x1, y1, t1, x2, y2, t2] = el.map(ElementText::from);
    StructureRecord {
        id: format!("{group}-{id}"),
        group,
        notation: Notation::Signed,
        origin: Origin::Family,
        status,
        expect,
        elements: Elements { x1, y1, t1, x2, y2, t2 },
        realization: None,
        note: note.map(str::to_string),
    }
}

/// Bₙ, n even ≥ 12.
pub fn bn_even(n: usize) -> Result<StructureRecord, PaperError> {
    check(Family::B, n, true, 12)?;
    let el = [
        cycle(1..n) + &neg(&[n]),
        cycle((3..=n).rev()),
        t(1, 2) + &pairs(n + 2, 3),
        cycle(1..=n - 3) + &neg(&[n - 2, n - 1, n]),
        cycle((5..=n).rev()),
        t(1, 4) + &t(2, 3) + &t(n, n - 2) + &pairs(n + 2, 5),
    ];
    Ok(family_record(format!("B{n}"), "family", Status::Printed, Expect::Pass, el, None))
}

/// Bₙ, n odd ≥ 11, as printed. The pairs form a Beauville structure but
/// t₁ does not invert the first pair.
pub fn bn_odd(n: usize) -> Result<StructureRecord, PaperError> {
    check(Family::B, n, false, 11)?;
    let el = [
        cycle(1..=n - 2) + &neg(&[n - 1]),
        cycle((2..=n).rev()),
        pairs(n, 2) + &t(n - 1, n),
        cycle(1..=n - 4) + &neg(&[n - 3, n - 2, n - 1]),
        cycle((4..=n).rev()),
        t(1, 3) + &pairs(n, 4),
    ];
    let note = "the second element of pair 2 is printed under the name y1; \
                t1 and t2 do not invert their pairs, so the structure is not certified strongly real";
    Ok(family_record(format!("B{n}"), "family", Status::Printed, Expect::Fail, el, Some(note)))
}

/// Bₙ, n odd ≥ 11: the corrected Dₙ structure with x₁ and x₂ multiplied by
/// the central element −1, which is outside Dₙ for odd n. The y's and t's
/// are unchanged, so each tᵢ still inverts its pair.
pub fn bn_odd_effective(n: usize) -> Result<StructureRecord, PaperError> {
    check(Family::B, n, false, 11)?;
    let d = dn_odd_corrected(n)?;
    let negate = |e: &ElementText| -> Result<String, PaperError> {
        let text = e.cycles().expect("family elements are cycles");
        let p = parse_signed(text, n).map_err(|err| PaperError::Malformed { name: text.into(), message: err.to_string() })?;
        Ok(format_signed(&p.negated()))
    };
    let e = &d.elements;
    let el = [
        negate(&e.x1)?,
        e.y1.cycles().unwrap().to_string(),
        e.t1.cycles().unwrap().to_string(),
        negate(&e.x2)?,
        e.y2.cycles().unwrap().to_string(),
        e.t2.cycles().unwrap().to_string(),
    ];
    let note = "replaces the printed odd-rank structure, whose witnesses do not invert their pairs";
    Ok(family_record(format!("B{n}"), "corrected", Status::Corrected, Expect::Pass, el, Some(note)))
}

/// Dₙ, n even ≥ 10.
pub fn dn_even(n: usize) -> Result<StructureRecord, PaperError> {
    check(Family::D, n, true, 10)?;
    let el = [
        cycle(1..=n - 3) + &neg(&[n - 2, n]),
        cycle((1..=n).rev()),
        pairs(n - 2, 1) + &t(n - 2, n),
        cycle(1..=n - 5) + &neg(&[n - 4, n - 3, n - 1, n]),
        cycle((3..=n).rev()),
        t(1, 2) + &pairs(n - 2, 3) + &t(n - 4, n) + &t(n - 3, n - 1),
    ];
    let note = "t2 is printed with its index not subscripted";
    Ok(family_record(format!("D{n}"), "family", Status::Printed, Expect::Pass, el, Some(note)))
}

/// Dₙ, n odd ≥ 11, as printed. The printed t₂ uses the point n − 4 twice
/// and is not a permutation.
pub fn dn_odd(n: usize) -> Result<StructureRecord, PaperError> {
    check(Family::D, n, false, 11)?;
    let el = [
        cycle(1..=n - 2) + &neg(&[n - 1, n]),
        cycle((2..=n).rev()),
        pairs(n, 2) + &t(n - 1, n),
        cycle(1..=n - 4) + &neg(&[n - 3, n - 2, n - 1, n]),
        cycle((4..=n).rev()),
        t(1, 3) + &pairs(n, 4) + &t(n - 4, n) + &t(n - 3, n - 2),
    ];
    let note = "t2 repeats the point n-4; superseded by the corrected record";
    Ok(family_record(format!("D{n}"), "family", Status::Printed, Expect::Malformed, el, Some(note)))
}

/// Dₙ, n odd ≥ 11, with t₂ ending in `(n−3,n)(n−2,n−1)` so that it
/// inverts x₂ and y₂.
pub fn dn_odd_corrected(n: usize) -> Result<StructureRecord, PaperError> {
    check(Family::D, n, false, 11)?;
    let mut r = dn_odd(n)?;
    r.elements.t2 = ElementText::from(t(1, 3) + &pairs(n, 4) + &t(n - 3, n) + &t(n - 2, n - 1));
    r.id = format!("D{n}-corrected");
    r.status = Status::Corrected;
    r.expect = Expect::Pass;
    r.note = Some("t2 ends with (n-3,n)(n-2,n-1) in place of the printed (n-4,n)(n-3,n-2)".into());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_forms() {
        assert_eq!(bn_even(12).unwrap().elements.x1.cycles(), Some("(1,2,3,4,5,6,7,8,9,10,11)(_12)"));
        assert_eq!(dn_odd(11).unwrap().elements.t1.cycles(), Some("(2,9)(3,8)(4,7)(5,6)(10,11)"));
        assert_eq!(bn_odd(11).unwrap().elements.y2.cycles(), Some("(11,10,9,8,7,6,5,4)"));
        assert_eq!(dn_odd(11).unwrap().elements.t2.cycles(), Some("(1,3)(4,7)(5,6)(7,11)(8,9)"));
        assert!(bn_even(13).is_err());
        assert!(bn_even(10).is_err());
        assert!(dn_even(9).is_err());
        assert!(dn_odd(9).is_err());
    }
}
