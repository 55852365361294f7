use serde::Serialize;
use serde_json::json;

use super::{ElementText, Expect, Notation, PaperError, Status, StructureRecord};
use crate::algebra::ExactMatrix;
use crate::beauville::{
    default_sigma_strategy, verify_unmixed, BeauvilleError, BeauvilleReport, BeauvilleStructure, GeneratingPair,
    GroupContext, SigmaStrategy, Verdict, SCHEMA_VERSION,
};
use crate::groups::intertwiner::Intertwiner;
use crate::groups::{CoxeterType, Element, GroupDescriptor, GroupError, RealizedGroup};
use crate::perms::{parse_plain, parse_signed};

/// The group a record lives in: the standard realization of its Coxeter
/// type, or the permutation group of its `realization`.
pub fn record_group(rec: &StructureRecord) -> Result<RealizedGroup, PaperError> {
    let Some(real) = &rec.realization else {
        return Ok(RealizedGroup::build_coxeter(rec.group.parse()?)?);
    };
    let (a, b) = rec
        .group
        .split_once('x')
        .ok_or_else(|| PaperError::Malformed { name: rec.group.clone(), message: "expected a product K1xK2".into() })?;
    let (a, b): (CoxeterType, CoxeterType) = (a.parse()?, b.parse()?);
    let gens = real
        .generators
        .iter()
        .map(|g| parse_plain(g, real.degree).map_err(|e| malformed(g, e)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RealizedGroup::permutation_group(GroupDescriptor::Product(a, b), real.degree, gens, a.order() * b.order())?)
}

fn malformed(name: &str, e: impl ToString) -> PaperError {
    PaperError::Malformed { name: name.to_string(), message: e.to_string() }
}

/// Finds the basis change from the record's coordinates to the root basis.
/// When the six matrices together do not preserve a root system of the
/// right type, names one whose removal repairs this.
fn intertwiner(t: CoxeterType, mats: &[(&str, ExactMatrix)]) -> Result<Intertwiner, PaperError> {
    let all: Vec<ExactMatrix> = mats.iter().map(|(_, m)| m.clone()).collect();
    match Intertwiner::discover(t, &all) {
        Ok(i) => Ok(i),
        Err(e) => {
            for (k, (name, _)) in mats.iter().enumerate() {
                let rest: Vec<ExactMatrix> =
                    all.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, m)| m.clone()).collect();
                if Intertwiner::discover(t, &rest).is_ok() {
                    return Err(PaperError::Group(GroupError::NotInGroup(format!(
                        "{name} does not preserve the root system of the other elements"
                    ))));
                }
            }
            Err(e.into())
        }
    }
}

/// Parses the six elements into `group`. Matrices are certified members;
/// permutations are checked for membership during verification.
pub fn parse_structure(rec: &StructureRecord, group: &RealizedGroup) -> Result<BeauvilleStructure, PaperError> {
    let named = rec.elements.named();
    let elements: Vec<Element> = match rec.notation {
        Notation::Signed => {
            let degree = match group.ctype() {
                Some(CoxeterType::B(n) | CoxeterType::D(n)) => n,
                Some(CoxeterType::A(n)) => n + 1,
                _ => return Err(malformed(&rec.id, "signed notation needs a group of type A, B or D")),
            };
            named
                .iter()
                .map(|(name, e)| {
                    let text = e.cycles().ok_or_else(|| malformed(name, "expected cycle notation"))?;
                    parse_signed(text, degree).map(Element::Signed).map_err(|err| malformed(name, err))
                })
                .collect::<Result<_, _>>()?
        }
        Notation::Plain => {
            let degree = group.degree();
            named
                .iter()
                .map(|(name, e)| {
                    let text = e.cycles().ok_or_else(|| malformed(name, "expected cycle notation"))?;
                    parse_plain(text, degree).map(Element::Perm).map_err(|err| malformed(name, err))
                })
                .collect::<Result<_, _>>()?
        }
        Notation::Matrix => {
            let mats = named
                .iter()
                .map(|(name, e)| match e {
                    ElementText::Matrix(m) => Ok((*name, m.to_matrix().map_err(|err| malformed(name, err))?)),
                    ElementText::Cycles(_) => Err(malformed(name, "expected a matrix literal")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            match group.ctype() {
                Some(t @ (CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8)) => {
                    let it = intertwiner(t, &mats)?;
                    mats.iter()
                        .map(|(name, m)| {
                            it.member(group, m).map_err(|e| PaperError::Group(GroupError::NotInGroup(format!("{name}: {e}"))))
                        })
                        .collect::<Result<_, _>>()?
                }
                _ => mats
                    .iter()
                    .map(|(name, m)| {
                        group
                            .membership_matrix(m)
                            .map_err(|e| PaperError::Group(GroupError::NotInGroup(format!("{name}: {e}"))))
                    })
                    .collect::<Result<_, _>>()?,
            }
        }
    };
    let [x1, y1, t1, x2, y2, t2]: [Element; 6] = elements.try_into().expect("six elements");
    Ok(BeauvilleStructure {
        pair1: GeneratingPair::new(x1, y1),
        pair2: GeneratingPair::new(x2, y2),
        witnesses: Some((t1, t2)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum RecordVerdict {
    Pass,
    Fail,
    Inconclusive,
    Malformed,
}

#[derive(Clone, Debug)]
pub struct RecordOutcome {
    pub id: String,
    pub group: String,
    pub status: Status,
    pub expect: Expect,
    pub verdict: RecordVerdict,
    /// Why a record failed before a report could be produced.
    pub detail: Option<String>,
    pub report: Option<BeauvilleReport>,
}

impl RecordOutcome {
    pub fn as_expected(&self) -> bool {
        matches!(
            (self.expect, self.verdict),
            (Expect::Pass, RecordVerdict::Pass)
                | (Expect::Fail, RecordVerdict::Fail)
                | (Expect::Malformed, RecordVerdict::Malformed)
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schemaVersion": SCHEMA_VERSION,
            "id": self.id,
            "group": self.group,
            "status": self.status,
            "expect": self.expect,
            "verdict": self.verdict,
            "asExpected": self.as_expected(),
            "detail": self.detail,
            "report": self.report.as_ref().map(BeauvilleReport::to_json),
        })
    }
}

/// Parses and verifies a record in its own group.
pub fn verify_record(rec: &StructureRecord, strategy: Option<&dyn SigmaStrategy>) -> Result<RecordOutcome, PaperError> {
    let group = record_group(rec)?;
    verify_record_in(rec, &group, strategy)
}

/// As [`verify_record`] with the group supplied, so one realization can
/// serve several records. The default Σ strategy is exact for small groups
/// and invariant otherwise.
pub fn verify_record_in(
    rec: &StructureRecord,
    group: &RealizedGroup,
    strategy: Option<&dyn SigmaStrategy>,
) -> Result<RecordOutcome, PaperError> {
    let outcome = |verdict, detail, report| RecordOutcome {
        id: rec.id.clone(),
        group: rec.group.clone(),
        status: rec.status,
        expect: rec.expect,
        verdict,
        detail,
        report,
    };
    let structure = match parse_structure(rec, group) {
        Ok(s) => s,
        Err(e @ PaperError::Malformed { .. }) => return Ok(outcome(RecordVerdict::Malformed, Some(e.to_string()), None)),
        Err(PaperError::Group(GroupError::NotInGroup(m))) => {
            return Ok(outcome(RecordVerdict::Fail, Some(format!("not in group: {m}")), None))
        }
        Err(e) => return Err(e),
    };
    let ctx = GroupContext::new(group);
    let fallback;
    let strategy = match strategy {
        Some(s) => s,
        None => {
            fallback = default_sigma_strategy(&ctx);
            fallback.as_ref()
        }
    };
    match verify_unmixed(&ctx, &structure, strategy, &rec.id) {
        Ok(report) => {
            let verdict = match report.verdict() {
                Verdict::Pass => RecordVerdict::Pass,
                Verdict::Fail => RecordVerdict::Fail,
                Verdict::Inconclusive => RecordVerdict::Inconclusive,
            };
            Ok(outcome(verdict, None, Some(report)))
        }
        Err(BeauvilleError::NotInGroup(m) | BeauvilleError::Group(GroupError::NotInGroup(m))) => {
            Ok(outcome(RecordVerdict::Fail, Some(format!("not in group: {m}")), None))
        }
        Err(e) => Err(e.into()),
    }
}
