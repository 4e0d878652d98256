use std::collections::BTreeSet;
use std::fmt;

/// A propositional formula over `bot`, letters, `&`, `|` and `->`.
///
/// Negation and verum are not constructors: `~a` is `a -> bot` and `top`
/// is `bot -> bot`. Use [`Formula::neg`] and [`Formula::top`] to build them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Bot,
    Letter(u32),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn letter(index: u32) -> Self {
        Formula::Letter(index)
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn imp(lhs: Formula, rhs: Formula) -> Self {
        Formula::Imp(Box::new(lhs), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::imp(f, Formula::Bot)
    }

    pub fn top() -> Self {
        Formula::imp(Formula::Bot, Formula::Bot)
    }

    /// Right-nested conjunction `f1 & (f2 & (... & fn))`; the empty
    /// conjunction is `top`.
    pub fn conj<I>(items: I) -> Self
    where
        I: IntoIterator<Item = Formula>,
        I::IntoIter: DoubleEndedIterator,
    {
        let mut iter = items.into_iter().rev();
        match iter.next() {
            None => Formula::top(),
            Some(last) => iter.fold(last, |acc, f| Formula::and(f, acc)),
        }
    }

    /// Right-nested disjunction; the empty disjunction is `bot`.
    pub fn disj<I>(items: I) -> Self
    where
        I: IntoIterator<Item = Formula>,
        I::IntoIter: DoubleEndedIterator,
    {
        let mut iter = items.into_iter().rev();
        match iter.next() {
            None => Formula::Bot,
            Some(last) => iter.fold(last, |acc, f| Formula::or(f, acc)),
        }
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Formula::Imp(l, r) if **l == Formula::Bot && **r == Formula::Bot)
    }

    /// The operand of a negation, if `self` has the shape `a -> bot`.
    pub fn negated(&self) -> Option<&Formula> {
        match self {
            Formula::Imp(l, r) if **r == Formula::Bot => Some(l),
            _ => None,
        }
    }

    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Imp(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn as_and(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::And(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn as_or(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Or(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Bot | Formula::Letter(_) => 0,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Bot | Formula::Letter(_) => 1,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn letters(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    pub(crate) fn collect_letters(&self, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Bot => {}
            Formula::Letter(i) => {
                out.insert(*i);
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
        }
    }

    /// Subformula closure, including `self`.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    pub(crate) fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.contains(self) {
            return;
        }
        out.insert(self.clone());
        match self {
            Formula::Bot | Formula::Letter(_) => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.collect_subformulas(out);
                r.collect_subformulas(out);
            }
        }
    }
}

/// Subformula closure of a collection of formulas.
pub fn subformulas_of<'a, I>(formulas: I) -> BTreeSet<Formula>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let mut out = BTreeSet::new();
    for f in formulas {
        f.collect_subformulas(&mut out);
    }
    out
}

/// Union of the letters occurring in a collection of formulas.
pub fn letters_of<'a, I>(formulas: I) -> BTreeSet<u32>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let mut out = BTreeSet::new();
    for f in formulas {
        f.collect_letters(&mut out);
    }
    out
}

// Printing. Binding strength: 2 for atoms and `~`/`top` sugar, 1 for `&`/`|`,
// 0 for `->`. A genuine implication is one that is not negation sugar.

fn is_real_imp(f: &Formula) -> bool {
    matches!(f, Formula::Imp(_, r) if **r != Formula::Bot)
}

fn write_atomic(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::And(..) | Formula::Or(..) => write!(out, "({f})"),
        _ if is_real_imp(f) => write!(out, "({f})"),
        _ => write!(out, "{f}"),
    }
}

fn write_junction(
    l: &Formula,
    r: &Formula,
    op: &str,
    same: fn(&Formula) -> bool,
    out: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    write_atomic(l, out)?;
    write!(out, " {op} ")?;
    // chains of the same connective associate to the right
    if same(r) {
        write!(out, "{r}")
    } else {
        write_atomic(r, out)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Bot => write!(f, "bot"),
            Formula::Letter(i) => write!(f, "p{i}"),
            _ if self.is_top() => write!(f, "top"),
            Formula::Imp(l, r) if **r == Formula::Bot => {
                write!(f, "~")?;
                write_atomic(l, f)
            }
            Formula::Imp(l, r) => {
                if is_real_imp(l) {
                    write!(f, "({l}) -> {r}")
                } else {
                    write!(f, "{l} -> {r}")
                }
            }
            Formula::And(l, r) => write_junction(l, r, "&", |g| matches!(g, Formula::And(..)), f),
            Formula::Or(l, r) => write_junction(l, r, "|", |g| matches!(g, Formula::Or(..)), f),
        }
    }
}
