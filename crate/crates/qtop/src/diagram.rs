//! Oriented link diagrams: planar-diagram records and braid closures.
//!
//! A crossing record `X(a,b,c,d)` lists the four arc labels counterclockwise
//! starting from the incoming under-strand, so the under-strand runs `a -> c`
//! and the over-strand occupies `b` and `d`. A crossing is positive exactly
//! when the over-strand enters at `b`: rotating the under-strand
//! counterclockwise then aligns it with the over-strand.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::unionfind::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("braid letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: u32 },
    #[error("invalid diagram: {0}")]
    Validity(String),
    #[error("inconsistent strand orientations: {0}")]
    Orientation(String),
    #[error("crossing index {index} out of range ({len} crossings)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("diagram is not expressible as a planar-diagram text ({0})")]
    Unrepresentable(String),
}

/// Word in the braid group on `strands` strands; letter `±i` crosses the
/// strands in positions `i` and `i+1`, positively or negatively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<i32>) -> Result<Self, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::Parse("strand count must be positive".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() > strands - 1 {
                return Err(DiagramError::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses `"B<n> l1 l2 ..."`, e.g. `"B3 1 -2 1 -2"`.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let mut parts = text.split_whitespace();
        let head = parts
            .next()
            .ok_or_else(|| DiagramError::Parse("empty braid text".into()))?;
        let n: u32 = head
            .strip_prefix('B')
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| DiagramError::Parse(format!("expected `B<n>` header, got `{head}`")))?;
        let mut letters = Vec::new();
        for tok in parts {
            let l: i32 = tok
                .parse()
                .map_err(|_| DiagramError::Parse(format!("bad braid letter `{tok}`")))?;
            letters.push(l);
        }
        BraidWord::new(n, letters)
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("B{}", self.strands);
        for l in &self.letters {
            let _ = write!(out, " {l}");
        }
        out
    }

    /// Permutation induced on strand positions (0-based), bottom to top.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands as usize).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Trace closure: joins each top endpoint to the bottom endpoint at the
    /// same position. Strands untouched by any letter close into crossing-free
    /// loops.
    pub fn closure(&self) -> LinkDiagram {
        let n = self.strands as usize;
        let start: Vec<u32> = (1..=n as u32).collect();
        let mut current = start.clone();
        let mut next = n as u32 + 1;
        let mut crossings: Vec<[u32; 4]> = Vec::with_capacity(self.letters.len());
        let mut signs: Vec<i8> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            let (u, v) = (current[i - 1], current[i]);
            let (x, y) = (next, next + 1);
            next += 2;
            if l > 0 {
                // Under-strand enters bottom-left; over-strand enters at `b`.
                crossings.push([u, v, y, x]);
                signs.push(1);
            } else {
                crossings.push([v, y, x, u]);
                signs.push(-1);
            }
            current[i - 1] = x;
            current[i] = y;
        }

        let mut uf = UnionFind::new(next as usize);
        for p in 0..n {
            uf.union(start[p] as usize, current[p] as usize);
        }
        let mut canon: HashMap<usize, u32> = HashMap::new();
        let mut fresh = 0u32;
        let crossings: Vec<[u32; 4]> = crossings
            .iter()
            .map(|rec| {
                let mut out = [0u32; 4];
                for (slot, &arc) in rec.iter().enumerate() {
                    let root = uf.find(arc as usize);
                    out[slot] = *canon.entry(root).or_insert_with(|| {
                        fresh += 1;
                        fresh
                    });
                }
                out
            })
            .collect();
        let free_loops = (0..n)
            .filter(|&p| !canon.contains_key(&uf.find(start[p] as usize)))
            .count();
        LinkDiagram {
            crossings,
            signs,
            free_loops,
        }
    }
}

/// Oriented link diagram: crossing records plus any crossing-free loops
/// (the only way to present zero-crossing unknot components).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    signs: Vec<i8>,
    free_loops: usize,
}

#[derive(Serialize)]
struct DiagramJson<'a> {
    crossings: &'a [[u32; 4]],
    signs: &'a [i8],
    components: usize,
}

impl LinkDiagram {
    /// Validates labels, orientations, and the stated signs.
    pub fn from_parts(
        crossings: Vec<[u32; 4]>,
        signs: Vec<i8>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        if crossings.len() != signs.len() {
            return Err(DiagramError::Validity(format!(
                "{} crossings but {} signs",
                crossings.len(),
                signs.len()
            )));
        }
        if let Some(s) = signs.iter().find(|s| !matches!(s, 1 | -1)) {
            return Err(DiagramError::Validity(format!("sign {s} is not +1/-1")));
        }
        validate_labels(&crossings)?;
        check_signs(&crossings, &signs)?;
        Ok(LinkDiagram {
            crossings,
            signs,
            free_loops,
        })
    }

    /// Parses whitespace-separated `X(a,b,c,d)` records; signs are derived
    /// from the orientations forced by the under-strand directions.
    pub fn parse_pd(text: &str) -> Result<Self, DiagramError> {
        let mut crossings = Vec::new();
        for tok in text.split_whitespace() {
            let body = tok
                .strip_prefix("X(")
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| DiagramError::Parse(format!("expected `X(a,b,c,d)`, got `{tok}`")))?;
            let fields: Vec<&str> = body.split(',').collect();
            if fields.len() != 4 {
                return Err(DiagramError::Parse(format!(
                    "crossing `{tok}` needs exactly 4 arc labels"
                )));
            }
            let mut rec = [0u32; 4];
            for (i, fstr) in fields.iter().enumerate() {
                rec[i] = fstr
                    .trim()
                    .parse()
                    .map_err(|_| DiagramError::Parse(format!("bad arc label `{fstr}`")))?;
            }
            crossings.push(rec);
        }
        validate_labels(&crossings)?;
        let signs = derive_signs(&crossings)?;
        Ok(LinkDiagram {
            crossings,
            signs,
            free_loops: 0,
        })
    }

    /// Diagram with the given number of crossing-free unknot components.
    pub fn unlink(loops: usize) -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            signs: Vec::new(),
            free_loops: loops,
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Number of link components: cycles of the arc-successor walk plus
    /// crossing-free loops.
    pub fn component_count(&self) -> usize {
        let arcs = 2 * self.crossings.len();
        let mut uf = UnionFind::new(arcs + 1);
        for rec in &self.crossings {
            uf.union(rec[0] as usize, rec[2] as usize);
            uf.union(rec[1] as usize, rec[3] as usize);
        }
        let mut roots: Vec<usize> = (1..=arcs).map(|a| uf.find(a)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len() + self.free_loops
    }

    fn check_index(&self, index: usize) -> Result<(), DiagramError> {
        if index < self.crossings.len() {
            Ok(())
        } else {
            Err(DiagramError::IndexOutOfRange {
                index,
                len: self.crossings.len(),
            })
        }
    }

    /// Exchanges the over- and under-strand at one crossing, negating its
    /// sign. The record rotates so it still starts at the incoming
    /// under-strand.
    pub fn crossing_switch(&self, index: usize) -> Result<Self, DiagramError> {
        self.check_index(index)?;
        let mut out = self.clone();
        let [a, b, c, d] = out.crossings[index];
        out.crossings[index] = if out.signs[index] == 1 {
            [b, c, d, a]
        } else {
            [d, a, b, c]
        };
        out.signs[index] = -out.signs[index];
        Ok(out)
    }

    /// Replaces one crossing by the orientation-respecting smoothing,
    /// rejoining incoming strands to outgoing ones. Component count changes
    /// by exactly one.
    pub fn crossing_smooth(&self, index: usize) -> Result<Self, DiagramError> {
        self.check_index(index)?;
        let arcs = 2 * self.crossings.len();
        let mut uf = UnionFind::new(arcs + 1);
        let [a, b, c, d] = self.crossings[index];
        if self.signs[index] == 1 {
            // Over-strand leaves at d: the incoming under-arc a continues
            // into d, and the incoming over-arc b continues into c.
            uf.union(a as usize, d as usize);
            uf.union(b as usize, c as usize);
        } else {
            uf.union(a as usize, b as usize);
            uf.union(d as usize, c as usize);
        }
        let mut canon: HashMap<usize, u32> = HashMap::new();
        let mut fresh = 0u32;
        let mut crossings = Vec::with_capacity(self.crossings.len() - 1);
        let mut signs = Vec::with_capacity(self.crossings.len() - 1);
        for (ci, rec) in self.crossings.iter().enumerate() {
            if ci == index {
                continue;
            }
            let mut out = [0u32; 4];
            for (slot, &arc) in rec.iter().enumerate() {
                let root = uf.find(arc as usize);
                out[slot] = *canon.entry(root).or_insert_with(|| {
                    fresh += 1;
                    fresh
                });
            }
            crossings.push(out);
            signs.push(self.signs[ci]);
        }
        // Arc classes that vanished from every remaining record closed up
        // into crossing-free loops.
        let mut vanished: Vec<usize> = (1..=arcs).map(|x| uf.find(x)).collect();
        vanished.sort_unstable();
        vanished.dedup();
        let free = vanished
            .into_iter()
            .filter(|root| !canon.contains_key(root))
            .count();
        Ok(LinkDiagram {
            crossings,
            signs,
            free_loops: self.free_loops + free,
        })
    }

    /// Switches every crossing: the mirror image of the diagram.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for i in 0..out.crossings.len() {
            out = out.crossing_switch(i).expect("index in range");
        }
        out
    }

    /// Serializes the crossing records. Fails when the diagram holds data the
    /// text cannot carry: crossing-free loops, or the orientation of a
    /// component that passes over at every one of its crossings (the records
    /// pin down only where strands go under, so parsing such text cannot
    /// recover which way that component runs).
    pub fn to_pd_text(&self) -> Result<String, DiagramError> {
        if self.free_loops > 0 {
            return Err(DiagramError::Unrepresentable(format!(
                "{} crossing-free loops",
                self.free_loops
            )));
        }
        let text = self
            .crossings
            .iter()
            .map(|r| format!("X({},{},{},{})", r[0], r[1], r[2], r[3]))
            .collect::<Vec<_>>()
            .join(" ");
        let reparsed = Self::parse_pd(&text).expect("serialized diagram is valid");
        if reparsed.signs != self.signs {
            return Err(DiagramError::Unrepresentable(
                "orientation of an everywhere-over component is not encoded by crossing records"
                    .into(),
            ));
        }
        Ok(text)
    }

    /// `{"crossings": ..., "signs": ..., "components": m}` echo.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&DiagramJson {
            crossings: &self.crossings,
            signs: &self.signs,
            components: self.component_count(),
        })
        .expect("diagram JSON never fails to serialize")
    }
}

fn validate_labels(crossings: &[[u32; 4]]) -> Result<(), DiagramError> {
    let arcs = 2 * crossings.len();
    let mut counts = vec![0u8; arcs + 1];
    for rec in crossings {
        for &arc in rec {
            if arc == 0 || arc as usize > arcs {
                return Err(DiagramError::Validity(format!(
                    "arc label {arc} outside 1..={arcs}"
                )));
            }
            counts[arc as usize] += 1;
        }
    }
    for (arc, &n) in counts.iter().enumerate().skip(1) {
        if n != 2 {
            return Err(DiagramError::Validity(format!(
                "arc label {arc} appears {n} times (want 2)"
            )));
        }
    }
    Ok(())
}

/// Orientation constraints on the per-crossing booleans
/// "over-strand enters at slot `b`": values forced by an arc joining an
/// over-slot to an under-slot, and equal/unequal ties between two crossings
/// joined by an arc lying over at both ends.
struct OrientationConstraints {
    forced: Vec<(usize, bool)>,
    /// (other crossing, whether the booleans must be equal), per crossing.
    edges: Vec<Vec<(usize, bool)>>,
}

fn orientation_constraints(
    crossings: &[[u32; 4]],
) -> Result<OrientationConstraints, DiagramError> {
    let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (ci, rec) in crossings.iter().enumerate() {
        for (slot, &arc) in rec.iter().enumerate() {
            occ.entry(arc).or_default().push((ci, slot));
        }
    }
    let mut forced: Vec<(usize, bool)> = Vec::new();
    let mut edges: Vec<Vec<(usize, bool)>> = vec![Vec::new(); crossings.len()];
    for (&arc, slots) in &occ {
        let (c1, s1) = slots[0];
        let (c2, s2) = slots[1];
        let over1 = s1 % 2 == 1;
        let over2 = s2 % 2 == 1;
        match (over1, over2) {
            (false, false) => {
                if s1 == s2 {
                    let role = if s1 == 0 { "head" } else { "tail" };
                    return Err(DiagramError::Orientation(format!(
                        "arc {arc} has two {role}s"
                    )));
                }
            }
            (true, true) => {
                if c1 != c2 {
                    // Roles must differ; slot 1 is a head iff x, slot 3 a
                    // head iff !x.
                    let equal = s1 != s2;
                    edges[c1].push((c2, equal));
                    edges[c2].push((c1, equal));
                }
                // Both over-slots on one crossing: roles already opposite.
            }
            _ => {
                let (under_slot, over_ci, over_slot) =
                    if over1 { (s2, c1, s1) } else { (s1, c2, s2) };
                let under_is_head = under_slot == 0;
                // The over occurrence takes the opposite role.
                let over_head = !under_is_head;
                let value = if over_slot == 1 { over_head } else { !over_head };
                forced.push((over_ci, value));
            }
        }
    }
    Ok(OrientationConstraints { forced, edges })
}

/// Decides, for every crossing, whether the over-strand enters at slot `b`
/// (positive) or slot `d` (negative), by propagating the head/tail roles
/// forced by the under-strands. Components that are everywhere-over admit
/// both orientations; the lowest-index undecided crossing is then taken
/// positive.
fn derive_signs(crossings: &[[u32; 4]]) -> Result<Vec<i8>, DiagramError> {
    let cons = orientation_constraints(crossings)?;
    let mut x: Vec<Option<bool>> = vec![None; crossings.len()];
    let mut queue: Vec<usize> = Vec::new();
    let assign = |x: &mut Vec<Option<bool>>,
                      queue: &mut Vec<usize>,
                      ci: usize,
                      v: bool|
     -> Result<(), DiagramError> {
        match x[ci] {
            None => {
                x[ci] = Some(v);
                queue.push(ci);
                Ok(())
            }
            Some(old) if old == v => Ok(()),
            Some(_) => Err(DiagramError::Orientation(format!(
                "crossing {ci} receives contradictory over-strand directions"
            ))),
        }
    };
    for &(ci, v) in &cons.forced {
        assign(&mut x, &mut queue, ci, v)?;
    }
    loop {
        while let Some(ci) = queue.pop() {
            let v = x[ci].expect("queued crossings are assigned");
            for &(cj, equal) in &cons.edges[ci] {
                assign(&mut x, &mut queue, cj, if equal { v } else { !v })?;
            }
        }
        match x.iter().position(|v| v.is_none()) {
            Some(ci) => assign(&mut x, &mut queue, ci, true)?,
            None => break,
        }
    }
    Ok(x.into_iter()
        .map(|v| if v.expect("all assigned") { 1 } else { -1 })
        .collect())
}

/// Accepts stated signs iff they satisfy every orientation constraint. A
/// component lying over at each of its crossings leaves its booleans
/// unforced, so several assignments can be consistent; any of them is a
/// legitimate orientation of the diagram.
fn check_signs(crossings: &[[u32; 4]], signs: &[i8]) -> Result<(), DiagramError> {
    let cons = orientation_constraints(crossings)?;
    let x: Vec<bool> = signs.iter().map(|&s| s == 1).collect();
    for &(ci, v) in &cons.forced {
        if x[ci] != v {
            return Err(DiagramError::Orientation(format!(
                "stated sign at crossing {ci} disagrees with its under-strand"
            )));
        }
    }
    for (ci, nbrs) in cons.edges.iter().enumerate() {
        for &(cj, equal) in nbrs {
            if (x[ci] == x[cj]) != equal {
                return Err(DiagramError::Orientation(format!(
                    "stated signs at crossings {ci} and {cj} give their shared over-strand two directions"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn closure_of(text: &str) -> LinkDiagram {
        BraidWord::parse(text).unwrap().closure()
    }

    #[test]
    fn braid_parse_and_round_trip() {
        let w = BraidWord::parse("B3 1 -2 1 -2").unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert_eq!(BraidWord::parse(&w.to_text()).unwrap(), w);
        assert_eq!(BraidWord::parse("B1").unwrap().letters(), &[] as &[i32]);
        assert_eq!(
            BraidWord::parse("B2 5"),
            Err(DiagramError::LetterOutOfRange { letter: 5, strands: 2 })
        );
        assert!(BraidWord::parse("B2 0").is_err());
        assert!(BraidWord::parse("B0 1").is_err());
        assert!(BraidWord::parse("Q2 1").is_err());
        assert!(BraidWord::parse("").is_err());
        assert!(BraidWord::parse("B2 x").is_err());
    }

    #[test]
    fn trefoil_closure_shape() {
        let d = closure_of("B2 1 1 1");
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.signs(), &[1, 1, 1]);
        assert_eq!(d.free_loops(), 0);
    }

    #[test]
    fn closure_edge_cases() {
        assert_eq!(closure_of("B2 1 1").component_count(), 2);
        let unlink = closure_of("B2");
        assert_eq!(unlink.component_count(), 2);
        assert_eq!(unlink.crossing_count(), 0);
        assert_eq!(closure_of("B1").component_count(), 1);
        // Untouched strand closes into a crossing-free loop.
        let d = closure_of("B3 1");
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn single_positive_kink() {
        let d = closure_of("B2 1");
        assert_eq!(d.crossings(), &[[1, 2, 2, 1]]);
        assert_eq!(d.signs(), &[1]);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn pd_parse_hopf() {
        let d = LinkDiagram::parse_pd("X(1,4,2,3) X(3,2,4,1)").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.signs(), &[1, 1]);
        assert_eq!(d.writhe(), 2);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn pd_parse_errors() {
        // Labels used once each cannot close up.
        assert!(matches!(
            LinkDiagram::parse_pd("X(1,3,2,4)"),
            Err(DiagramError::Validity(_))
        ));
        assert!(matches!(
            LinkDiagram::parse_pd("X(1,2,3)"),
            Err(DiagramError::Parse(_))
        ));
        assert!(matches!(
            LinkDiagram::parse_pd("Y(1,2,2,1)"),
            Err(DiagramError::Parse(_))
        ));
        // Arc 1 enters the under-slot `a` twice: two heads.
        assert!(matches!(
            LinkDiagram::parse_pd("X(1,2,3,4) X(1,4,3,2)"),
            Err(DiagramError::Orientation(_))
        ));
        // Kinks stacked head-to-tail are fine and force mixed signs.
        let kinks = LinkDiagram::parse_pd("X(1,2,2,3) X(3,1,4,4)").unwrap();
        assert_eq!(kinks.signs(), &[1, -1]);
        // Empty text is the empty diagram.
        let empty = LinkDiagram::parse_pd("").unwrap();
        assert_eq!(empty.crossing_count(), 0);
        assert_eq!(empty.component_count(), 0);
    }

    #[test]
    fn pd_round_trip_braid_closures() {
        for text in ["B2 1 1 1", "B3 1 -2 1 -2", "B2 1", "B3 -1 -1 2", "B4 1 2 3 -2 1"] {
            let d = closure_of(text);
            let back = LinkDiagram::parse_pd(&d.to_pd_text().unwrap()).unwrap();
            assert_eq!(back, d, "through PD text for {text}");
        }
        // Crossing-free loops cannot be written in PD form.
        assert!(closure_of("B3 1").to_pd_text().is_err());
        assert!(LinkDiagram::unlink(2).to_pd_text().is_err());
    }

    #[test]
    fn switch_is_a_sign_flipping_involution() {
        let d = closure_of("B3 1 -2 1 -2");
        for i in 0..d.crossing_count() {
            let s = d.crossing_switch(i).unwrap();
            assert_eq!(s.writhe(), d.writhe() - 2 * d.signs()[i] as i64);
            assert_eq!(s.component_count(), d.component_count());
            assert_eq!(s.crossing_switch(i).unwrap(), d);
        }
        assert!(matches!(
            d.crossing_switch(99),
            Err(DiagramError::IndexOutOfRange { index: 99, len: 4 })
        ));
    }

    #[test]
    fn smooth_golden_cases() {
        let trefoil = closure_of("B2 1 1 1");
        let s = trefoil.crossing_smooth(0).unwrap();
        assert_eq!(s.crossing_count(), 2);
        assert_eq!(s.writhe(), 2);
        assert_eq!(s.component_count(), 2);

        let hopf = closure_of("B2 1 1");
        let s = hopf.crossing_smooth(1).unwrap();
        assert_eq!(s.component_count(), 1);
        assert_eq!(s.writhe(), 1);

        // Smoothing a kink splits off a crossing-free loop.
        let kink = closure_of("B2 1");
        let s = kink.crossing_smooth(0).unwrap();
        assert_eq!(s.crossing_count(), 0);
        assert_eq!(s.component_count(), 2);
        assert_eq!(s.free_loops(), 2);

        assert!(kink.crossing_smooth(1).is_err());
    }

    #[test]
    fn mirror_negates_writhe() {
        let d = closure_of("B3 1 -2 1 1");
        let m = d.mirror();
        assert_eq!(m.writhe(), -d.writhe());
        assert_eq!(m.component_count(), d.component_count());
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn diagram_json_echo() {
        let d = closure_of("B2 1 1");
        assert_eq!(
            d.to_json_string(),
            r#"{"crossings":[[1,2,3,4],[4,3,2,1]],"signs":[1,1],"components":2}"#
        );
    }

    #[test]
    fn from_parts_validates() {
        let d = closure_of("B2 1 1 1");
        let rebuilt = LinkDiagram::from_parts(
            d.crossings().to_vec(),
            d.signs().to_vec(),
            0,
        )
        .unwrap();
        assert_eq!(rebuilt, d);
        // Lying about a sign is caught by orientation propagation.
        let mut bad_signs = d.signs().to_vec();
        bad_signs[0] = -1;
        assert!(LinkDiagram::from_parts(d.crossings().to_vec(), bad_signs, 0).is_err());
    }

    fn random_word(rng: &mut ChaCha8Rng) -> BraidWord {
        let n = rng.random_range(2..=4u32);
        let len = rng.random_range(0..=10usize);
        let letters = (0..len)
            .map(|_| {
                let i = rng.random_range(1..=(n - 1) as i32);
                if rng.random_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::new(n, letters).unwrap()
    }

    #[test]
    fn components_equal_permutation_cycles() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0D1A6);
        for _ in 0..300 {
            let w = random_word(&mut rng);
            let perm = w.permutation();
            let mut seen = vec![false; perm.len()];
            let mut cycles = 0;
            for s in 0..perm.len() {
                if seen[s] {
                    continue;
                }
                cycles += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p];
                }
            }
            assert_eq!(w.closure().component_count(), cycles, "word {}", w.to_text());
        }
    }

    #[test]
    fn switch_and_smooth_component_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
        for _ in 0..200 {
            let w = random_word(&mut rng);
            let d = w.closure();
            for i in 0..d.crossing_count() {
                let sw = d.crossing_switch(i).unwrap();
                assert_eq!(sw.component_count(), d.component_count());
                let sm = d.crossing_smooth(i).unwrap();
                let delta =
                    (sm.component_count() as i64 - d.component_count() as i64).abs();
                assert_eq!(delta, 1, "word {}, crossing {i}", w.to_text());
            }
        }
    }

    #[test]
    fn pd_round_trip_random_closures() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        let mut checked = 0;
        let mut unwritable = 0;
        while checked < 150 {
            let w = random_word(&mut rng);
            let d = w.closure();
            if d.free_loops() > 0 {
                continue;
            }
            match d.to_pd_text() {
                Ok(text) => {
                    let back = LinkDiagram::parse_pd(&text).unwrap();
                    assert_eq!(back, d, "word {}", w.to_text());
                    checked += 1;
                }
                // A component lying over at all of its crossings has an
                // orientation the record format cannot carry.
                Err(DiagramError::Unrepresentable(_)) => unwritable += 1,
                Err(e) => panic!("word {}: {e}", w.to_text()),
            }
        }
        assert!(unwritable > 0, "sweep never exercised the ambiguous case");
    }

    #[test]
    fn everywhere_over_component_orientation() {
        // One strand of this closure runs over at both crossings, so the
        // records admit either direction for it. The text keeps the
        // orientation whose lowest-index undecided crossing is positive and
        // refuses to stand for the other one.
        let plus_first = closure_of("B2 1 -1");
        assert_eq!(plus_first.signs(), &[1, -1]);
        let text = plus_first.to_pd_text().unwrap();
        assert_eq!(LinkDiagram::parse_pd(&text).unwrap(), plus_first);

        let minus_first = closure_of("B2 -1 1");
        assert_eq!(minus_first.signs(), &[-1, 1]);
        assert!(matches!(
            minus_first.to_pd_text(),
            Err(DiagramError::Unrepresentable(_))
        ));
        // Both orientations are legitimate diagrams.
        LinkDiagram::from_parts(
            minus_first.crossings().to_vec(),
            minus_first.signs().to_vec(),
            0,
        )
        .unwrap();
    }
}
