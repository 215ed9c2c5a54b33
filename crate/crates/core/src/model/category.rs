//! Base categories of the shipped presheaf models.
//!
//! All three categories are thin (at most one morphism between two objects),
//! so a morphism `x -> y` is represented by its endpoints and a validity check.

use alloc::vec::Vec;
use core::fmt;

/// An object of one of the shipped base categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Obj {
    /// The unique object of the trivial category.
    Point,
    /// A stage of the ω category.
    Stage(u32),
    /// Left leg of the walking cospan.
    Left,
    /// Right leg of the walking cospan.
    Right,
    /// Apex of the walking cospan (related pairs).
    Relation,
}

impl Obj {
    pub fn category(&self) -> BaseCategory {
        match self {
            Obj::Point => BaseCategory::Star,
            Obj::Stage(_) => BaseCategory::Omega,
            Obj::Left | Obj::Right | Obj::Relation => BaseCategory::Wedge,
        }
    }

    /// Stage number of an ω object. Panics on other objects.
    pub fn stage(&self) -> u32 {
        match self {
            Obj::Stage(n) => *n,
            other => panic!("expected an ω stage, found {other}"),
        }
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obj::Point => write!(f, "tt"),
            Obj::Stage(n) => write!(f, "{n}"),
            Obj::Left => write!(f, "left"),
            Obj::Right => write!(f, "right"),
            Obj::Relation => write!(f, "relation"),
        }
    }
}

/// The base categories a mode can be interpreted as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseCategory {
    /// One object, one morphism.
    Star,
    /// Natural numbers ordered by `≤`.
    Omega,
    /// The walking cospan `left -> relation <- right`.
    Wedge,
}

impl BaseCategory {
    /// Whether there is a morphism `x -> y`.
    pub fn hom(&self, x: &Obj, y: &Obj) -> bool {
        if x.category() != *self || y.category() != *self {
            return false;
        }
        match (x, y) {
            (Obj::Point, Obj::Point) => true,
            (Obj::Stage(m), Obj::Stage(n)) => m <= n,
            (a, b) if a == b => true,
            (Obj::Left | Obj::Right, Obj::Relation) => true,
            _ => false,
        }
    }

    /// Identity morphism on `x`, as its pair of endpoints.
    pub fn hom_id(&self, x: &Obj) -> (Obj, Obj) {
        assert_eq!(x.category(), *self, "object {x} is not in {self}");
        (*x, *x)
    }

    /// Whether `x -> y` is a generating morphism: every morphism is a
    /// composite of identities and generating ones.
    pub fn generates(&self, x: &Obj, y: &Obj) -> bool {
        match (x, y) {
            (Obj::Stage(m), Obj::Stage(n)) => m + 1 == *n,
            _ => x != y && self.hom(x, y),
        }
    }

    /// Composite `g ∘ f` of `f: x -> y` and `g: y -> z`, or `None` when the
    /// inputs are not composable morphisms.
    pub fn hom_compose(&self, g: (Obj, Obj), f: (Obj, Obj)) -> Option<(Obj, Obj)> {
        if f.1 != g.0 || !self.hom(&f.0, &f.1) || !self.hom(&g.0, &g.1) {
            return None;
        }
        Some((f.0, g.1))
    }

    /// Objects of the category. For ω this is truncated to stages `0..=bound`.
    pub fn objects(&self, bound: u32) -> Vec<Obj> {
        match self {
            BaseCategory::Star => alloc::vec![Obj::Point],
            BaseCategory::Omega => (0..=bound).map(Obj::Stage).collect(),
            BaseCategory::Wedge => alloc::vec![Obj::Left, Obj::Right, Obj::Relation],
        }
    }

    /// All objects with a morphism into `x`. Finite in every shipped category.
    pub fn below(&self, x: &Obj) -> Vec<Obj> {
        match x {
            Obj::Stage(n) => (0..=*n).map(Obj::Stage).collect(),
            _ => self.objects(0).into_iter().filter(|y| self.hom(y, x)).collect(),
        }
    }

    /// All morphisms whose endpoints are among `objects(bound)`.
    pub fn morphisms(&self, bound: u32) -> Vec<(Obj, Obj)> {
        let obs = self.objects(bound);
        let mut out = Vec::new();
        for x in &obs {
            for y in &obs {
                if self.hom(x, y) {
                    out.push((*x, *y));
                }
            }
        }
        out
    }

    /// A canonical object, used when a query needs any object at all.
    pub fn some_object(&self) -> Obj {
        match self {
            BaseCategory::Star => Obj::Point,
            BaseCategory::Omega => Obj::Stage(0),
            BaseCategory::Wedge => Obj::Relation,
        }
    }
}

impl fmt::Display for BaseCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseCategory::Star => write!(f, "★"),
            BaseCategory::Omega => write!(f, "ω"),
            BaseCategory::Wedge => write!(f, "⋀"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn category_laws_exhaustive() {
        for cat in [BaseCategory::Star, BaseCategory::Omega, BaseCategory::Wedge] {
            let homs = cat.morphisms(6);
            for &(x, y) in &homs {
                let idx = cat.hom_id(&x);
                let idy = cat.hom_id(&y);
                assert_eq!(cat.hom_compose((x, y), idx), Some((x, y)));
                assert_eq!(cat.hom_compose(idy, (x, y)), Some((x, y)));
            }
            for &f in &homs {
                for &g in &homs {
                    for &h in &homs {
                        let left = cat.hom_compose(h, g).and_then(|hg| cat.hom_compose(hg, f));
                        let right = cat.hom_compose(g, f).and_then(|gf| cat.hom_compose(h, gf));
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn wedge_has_five_morphisms() {
        assert_eq!(BaseCategory::Wedge.morphisms(0).len(), 5);
        assert!(BaseCategory::Wedge.hom(&Obj::Left, &Obj::Relation));
        assert!(!BaseCategory::Wedge.hom(&Obj::Relation, &Obj::Left));
        assert!(!BaseCategory::Wedge.hom(&Obj::Left, &Obj::Right));
    }

    #[test]
    fn omega_below_is_initial_segment() {
        assert_eq!(
            BaseCategory::Omega.below(&Obj::Stage(2)),
            alloc::vec![Obj::Stage(0), Obj::Stage(1), Obj::Stage(2)]
        );
        assert!(!BaseCategory::Omega.hom(&Obj::Stage(3), &Obj::Stage(2)));
    }

    #[test]
    fn generating_morphisms_span_every_morphism() {
        for cat in [BaseCategory::Star, BaseCategory::Omega, BaseCategory::Wedge] {
            for (x, y) in cat.morphisms(6) {
                // Walk down from y through generators until x is reached.
                let mut reach = alloc::vec![y];
                let mut frontier = alloc::vec![y];
                while let Some(z) = frontier.pop() {
                    for w in cat.objects(6) {
                        if cat.generates(&w, &z) && !reach.contains(&w) {
                            assert!(cat.hom(&w, &z));
                            reach.push(w);
                            frontier.push(w);
                        }
                    }
                }
                assert!(reach.contains(&x), "{x} -> {y} in {cat}");
            }
        }
    }
}
