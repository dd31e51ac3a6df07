use std::fmt;

/// A realm element. Identity is structural and classical: two elements are
/// either the same or different, never both or neither.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Atom(String),
    Nat(u64),
    Pair(Box<Element>, Box<Element>),
    /// `(x, i)` marker used by disjoint unions.
    Tag(Box<Element>, u8),
}

impl Element {
    pub fn atom(name: impl Into<String>) -> Self {
        Element::Atom(name.into())
    }

    pub fn pair(left: Element, right: Element) -> Self {
        Element::Pair(Box::new(left), Box::new(right))
    }

    pub fn tag(inner: Element, index: u8) -> Self {
        Element::Tag(Box::new(inner), index)
    }
}

impl From<&str> for Element {
    fn from(name: &str) -> Self {
        Element::atom(name)
    }
}

impl From<u64> for Element {
    fn from(n: u64) -> Self {
        Element::Nat(n)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Atom(name) => f.write_str(name),
            Element::Nat(n) => write!(f, "{n}"),
            Element::Pair(a, b) => write!(f, "({a},{b})"),
            Element::Tag(x, i) => write!(f, "{x}@{i}"),
        }
    }
}
