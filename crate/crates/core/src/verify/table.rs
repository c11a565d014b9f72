use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::kernel::{Element, KernelError, Window, F2};

/// A finite explicit map on elements over `{[0), [1)}`, used as a black-box
/// candidate morphism.
///
/// `n` is the radius of the checked window; the domain must contain
/// `Window(n)` and may be larger. Products of two `Window(n)` elements stay
/// inside `Window(3n)`, so a table covering that radius lets every pair be
/// checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct MapTable {
    n: u32,
    entries: HashMap<Element, Element>,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    n: u32,
    entries: Vec<RawEntry>,
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    x: Element,
    y: Element,
}

impl TryFrom<RawTable> for MapTable {
    type Error = VerifyError;

    fn try_from(raw: RawTable) -> Result<Self, Self::Error> {
        MapTable::new(raw.n, raw.entries.into_iter().map(|e| (e.x, e.y)))
    }
}

impl From<MapTable> for RawTable {
    fn from(t: MapTable) -> Self {
        RawTable {
            n: t.n,
            entries: t
                .sorted_entries()
                .into_iter()
                .map(|(x, y)| RawEntry { x, y })
                .collect(),
        }
    }
}

impl MapTable {
    pub fn new(
        n: u32,
        entries: impl IntoIterator<Item = (Element, Element)>,
    ) -> Result<Self, VerifyError> {
        let mut map = HashMap::new();
        for (x, y) in entries {
            if x.f > 1 || y.f > 1 {
                return Err(VerifyError::MalformedTable(format!(
                    "entry {x} -> {y} uses a tail index outside {{0, 1}}"
                )));
            }
            if map.insert(x, y).is_some() {
                return Err(VerifyError::MalformedTable(format!("duplicate key {x}")));
            }
        }
        if let Some(missing) = F2.window(n).iter().find(|x| !map.contains_key(x)) {
            return Err(VerifyError::MalformedTable(format!(
                "domain does not cover window {n}: {missing} is missing"
            )));
        }
        Ok(MapTable { n, entries: map })
    }

    /// Tabulates `f` on `Window(3n)`.
    pub fn tabulate(
        n: u32,
        f: impl Fn(Element) -> Result<Element, KernelError>,
    ) -> Result<Self, KernelError> {
        Self::tabulate_on(n, 3 * n, f)
    }

    /// Tabulates `f` on `Window(domain)` with checked radius `n ≤ domain`.
    pub fn tabulate_on(
        n: u32,
        domain: u32,
        f: impl Fn(Element) -> Result<Element, KernelError>,
    ) -> Result<Self, KernelError> {
        let domain = domain.max(n);
        let entries = F2
            .window(domain)
            .iter()
            .map(|x| Ok((x, f(x)?)))
            .collect::<Result<HashMap<_, _>, KernelError>>()?;
        Ok(MapTable { n, entries })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn window(&self) -> Window {
        F2.window(self.n)
    }

    pub fn get(&self, x: &Element) -> Option<Element> {
        self.entries.get(x).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sorted_entries(&self) -> Vec<(Element, Element)> {
        let mut v: Vec<_> = self.entries.iter().map(|(x, y)| (*x, *y)).collect();
        v.sort_unstable();
        v
    }

    /// Value at a window element; the constructor guarantees presence.
    pub(crate) fn at(&self, x: &Element) -> Element {
        self.entries[x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: i64, j: i64, f: usize) -> Element {
        Element::new(i, j, f)
    }

    #[test]
    fn tabulate_covers_closure_radius() {
        let t = MapTable::tabulate(2, Ok).unwrap();
        assert_eq!(t.len(), F2.window(6).len());
        assert_eq!(t.get(&e(-6, 6, 1)), Some(e(-6, 6, 1)));
        assert_eq!(t.window().len(), 50);
    }

    #[test]
    fn rejects_bad_tables() {
        let w: Vec<_> = F2.window(1).iter().map(|x| (x, x)).collect();
        assert!(MapTable::new(1, w.clone()).is_ok());
        assert!(matches!(
            MapTable::new(2, w.clone()),
            Err(VerifyError::MalformedTable(_))
        ));
        let mut dup = w.clone();
        dup.push(w[0]);
        assert!(MapTable::new(1, dup).is_err());
        let mut foreign = w.clone();
        foreign.push((e(9, 9, 2), e(0, 0, 0)));
        assert!(MapTable::new(1, foreign).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = MapTable::tabulate_on(1, 1, |x| x.shifted(1)).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with(r#"{"n":1,"entries":[{"x":[-1,-1,0],"y":[0,0,0]}"#));
        let back: MapTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<MapTable>(r#"{"n":1,"entries":[]}"#).is_err());
    }
}
