//! The six frame conditions and the correspondence countermodels for
//! (Abs) and (¬¬I).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::semantics::{FiniteFrame, Model, SemanticsError, WorldSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameProperty {
    Reflexive,
    SuccessorSerial,
    PseudoReflexive,
    StronglyPseudoReflexive,
    PseudoSymmetric,
    WeaklyPseudoSymmetric,
}

impl FrameProperty {
    pub const ALL: [FrameProperty; 6] = [
        FrameProperty::Reflexive,
        FrameProperty::SuccessorSerial,
        FrameProperty::PseudoReflexive,
        FrameProperty::StronglyPseudoReflexive,
        FrameProperty::PseudoSymmetric,
        FrameProperty::WeaklyPseudoSymmetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameProperty::Reflexive => "reflexive",
            FrameProperty::SuccessorSerial => "successor_serial",
            FrameProperty::PseudoReflexive => "pseudo_reflexive",
            FrameProperty::StronglyPseudoReflexive => "strongly_pseudo_reflexive",
            FrameProperty::PseudoSymmetric => "pseudo_symmetric",
            FrameProperty::WeaklyPseudoSymmetric => "weakly_pseudo_symmetric",
        }
    }
}

impl fmt::Display for FrameProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first world (in index order) at which a property fails, plus the
/// offending successor for the conditions quantifying over successors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub world: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub successor: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameClassification {
    pub reflexive: bool,
    pub successor_serial: bool,
    pub pseudo_reflexive: bool,
    pub strongly_pseudo_reflexive: bool,
    pub pseudo_symmetric: bool,
    pub weakly_pseudo_symmetric: bool,
    pub witnesses: BTreeMap<FrameProperty, Witness>,
}

impl FrameClassification {
    pub fn holds(&self, property: FrameProperty) -> bool {
        match property {
            FrameProperty::Reflexive => self.reflexive,
            FrameProperty::SuccessorSerial => self.successor_serial,
            FrameProperty::PseudoReflexive => self.pseudo_reflexive,
            FrameProperty::StronglyPseudoReflexive => self.strongly_pseudo_reflexive,
            FrameProperty::PseudoSymmetric => self.pseudo_symmetric,
            FrameProperty::WeaklyPseudoSymmetric => self.weakly_pseudo_symmetric,
        }
    }

    pub fn witness(&self, property: FrameProperty) -> Option<Witness> {
        self.witnesses.get(&property).copied()
    }
}

impl fmt::Display for FrameClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in FrameProperty::ALL.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{:<26} {}", p.name(), self.holds(*p))?;
            if let Some(w) = self.witness(*p) {
                write!(f, "  (fails at world {}", w.world)?;
                if let Some(v) = w.successor {
                    write!(f, ", successor {v}")?;
                }
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

/// `box(pre({w}))`, the least fixpoint containing `w`.
fn point_closure(frame: &FiniteFrame, w: usize) -> WorldSet {
    frame.closure_of(&WorldSet::singleton(frame.size(), w))
}

/// `−box(∅) ∩ box(pre({w}))`
fn live_closure(frame: &FiniteFrame, w: usize) -> WorldSet {
    frame
        .bottom()
        .complement()
        .intersection(&point_closure(frame, w))
}

fn first_failure<F>(frame: &FiniteFrame, mut fails: F) -> Option<Witness>
where
    F: FnMut(usize) -> Option<Option<usize>>,
{
    (0..frame.size()).find_map(|w| {
        fails(w).map(|successor| Witness {
            world: w,
            successor,
        })
    })
}

/// First successor of `w` outside `allowed`.
fn bad_successor(frame: &FiniteFrame, w: usize, allowed: &WorldSet) -> Option<usize> {
    frame.successors(w).difference(allowed).first()
}

/// Decides the six frame conditions by direct unfolding.
pub fn classify(frame: &FiniteFrame) -> FrameClassification {
    let bottom = frame.bottom();
    let mut witnesses = BTreeMap::new();

    let reflexive = first_failure(frame, |w| (!frame.has_edge(w, w)).then_some(None));
    let successor_serial = first_failure(frame, |w| {
        bad_successor(frame, w, &bottom.complement()).map(Some)
    });
    let pseudo_reflexive = first_failure(frame, |w| {
        let ok = bottom.contains(w) || frame.diamond_of(&point_closure(frame, w)).contains(w);
        (!ok).then_some(None)
    });
    let strongly = first_failure(frame, |w| {
        let ok = bottom.contains(w) || frame.diamond_of(&live_closure(frame, w)).contains(w);
        (!ok).then_some(None)
    });
    let pseudo_symmetric = first_failure(frame, |w| {
        let allowed = frame.diamond_of(&point_closure(frame, w));
        bad_successor(frame, w, &allowed).map(Some)
    });
    let weakly = first_failure(frame, |w| {
        let allowed = bottom.union(&frame.diamond_of(&live_closure(frame, w)));
        bad_successor(frame, w, &allowed).map(Some)
    });

    let results = [
        (FrameProperty::Reflexive, reflexive),
        (FrameProperty::SuccessorSerial, successor_serial),
        (FrameProperty::PseudoReflexive, pseudo_reflexive),
        (FrameProperty::StronglyPseudoReflexive, strongly),
        (FrameProperty::PseudoSymmetric, pseudo_symmetric),
        (FrameProperty::WeaklyPseudoSymmetric, weakly),
    ];
    for (p, w) in results {
        if let Some(w) = w {
            witnesses.insert(p, w);
        }
    }
    FrameClassification {
        reflexive: reflexive.is_none(),
        successor_serial: successor_serial.is_none(),
        pseudo_reflexive: pseudo_reflexive.is_none(),
        strongly_pseudo_reflexive: strongly.is_none(),
        pseudo_symmetric: pseudo_symmetric.is_none(),
        weakly_pseudo_symmetric: weakly.is_none(),
        witnesses,
    }
}

/// The model sending `p0` to `box(pre({w0}))` and every other letter to
/// `box(∅)`. Always a box-pre model.
pub fn correspondence_countermodel(
    frame: &FiniteFrame,
    w0: usize,
) -> Result<Model, SemanticsError> {
    if w0 >= frame.size() {
        return Err(SemanticsError::WorldOutOfRange {
            world: w0,
            size: frame.size(),
        });
    }
    let valuation = BTreeMap::from([(0, point_closure(frame, w0))]);
    Model::new(frame.clone(), valuation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn ws(size: usize, worlds: &[usize]) -> WorldSet {
        WorldSet::from_worlds(size, worlds.iter().copied())
    }

    #[test]
    fn reflexive_singleton_has_everything() {
        let c = classify(&FiniteFrame::new(1, [(0, 0)]).unwrap());
        assert!(FrameProperty::ALL.iter().all(|p| c.holds(*p)));
        assert!(c.witnesses.is_empty());
    }

    #[test]
    fn surrogate_frame() {
        let c = classify(&FiniteFrame::new(3, [(0, 1), (0, 2), (1, 2), (2, 2)]).unwrap());
        assert!(c.pseudo_reflexive);
        assert!(c.pseudo_symmetric);
        assert!(!c.reflexive);
        assert_eq!(
            c.witness(FrameProperty::Reflexive),
            Some(Witness {
                world: 0,
                successor: None
            })
        );
    }

    #[test]
    fn chain_fails_weak_pseudo_symmetry() {
        let c = classify(&FiniteFrame::new(3, [(0, 1), (1, 2)]).unwrap());
        assert!(!c.weakly_pseudo_symmetric);
        assert_eq!(
            c.witness(FrameProperty::WeaklyPseudoSymmetric),
            Some(Witness {
                world: 0,
                successor: Some(1)
            })
        );
        assert!(!c.successor_serial);
        assert_eq!(
            c.witness(FrameProperty::SuccessorSerial),
            Some(Witness {
                world: 1,
                successor: Some(2)
            })
        );
    }

    #[test]
    fn countermodel_examples() {
        let f = FiniteFrame::new(2, [(0, 1)]).unwrap();
        let m = correspondence_countermodel(&f, 0).unwrap();
        assert_eq!(m.value(0), ws(2, &[0, 1]));

        let chain = FiniteFrame::new(3, [(0, 1), (1, 2)]).unwrap();
        let m = correspondence_countermodel(&chain, 0).unwrap();
        assert_eq!(m.value(0), ws(3, &[0, 2]));
        assert!(m.satisfies(0, &parse("p0").unwrap()));
        assert!(!m.satisfies(0, &parse("~~p0").unwrap()));

        let f = FiniteFrame::new(3, [(0, 1), (0, 2), (1, 2), (2, 2)]).unwrap();
        let m = correspondence_countermodel(&f, 0).unwrap();
        assert_eq!(m.value(0), f.full_set());

        assert!(correspondence_countermodel(&f, 3).is_err());
    }
}
