use serde::{Deserialize, Serialize};

use crate::error::{domain, HallError, Result};

/// A finite quiver without loops. Vertices are `0..n` with display names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    names: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(names: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let n = names.len();
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return domain(format!("arrow ({s},{t}) has an endpoint outside 0..{n}"));
            }
            if s == t {
                return domain(format!("loop at vertex {s}: quivers may not have loops"));
            }
        }
        Ok(Self { names, arrows })
    }

    fn numbered(n: usize, arrows: Vec<(usize, usize)>) -> Self {
        Self::new((1..=n).map(|i| i.to_string()).collect(), arrows).unwrap()
    }

    /// One vertex, no arrows.
    pub fn point() -> Self {
        Self::numbered(1, vec![])
    }

    /// `1 → 2`.
    pub fn a2() -> Self {
        Self::numbered(2, vec![(0, 1)])
    }

    /// Linearly oriented `A_n`: `1 → 2 → ⋯ → n`.
    pub fn linear(n: usize) -> Self {
        Self::numbered(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// Two vertices joined by two parallel arrows `1 ⇉ 2`.
    pub fn kronecker() -> Self {
        Self::numbered(2, vec![(0, 1), (0, 1)])
    }

    /// The cyclic quiver with `p ≥ 2` vertices and arrows `j → j−1 (mod p)`.
    pub fn cyclic(p: usize) -> Result<Self> {
        if p < 2 {
            return domain("a cyclic quiver without loops needs at least two vertices");
        }
        Ok(Self::new(
            (0..p).map(|i| i.to_string()).collect(),
            (0..p).map(|j| (j, (j + p - 1) % p)).collect(),
        )
        .unwrap())
    }

    pub fn n_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `c_{ij}`: the number of arrows `i → j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|&&a| a == (i, j)).count()
    }

    /// `a_{ij} = 2δ_{ij} − c_{ij} − c_{ji}`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        2 * (i == j) as i64 - self.arrow_count(i, j) as i64 - self.arrow_count(j, i) as i64
    }

    /// True when the arrows form one oriented cycle through every vertex.
    pub fn is_oriented_cycle(&self) -> bool {
        let n = self.n_vertices();
        if n < 2 || self.arrows.len() != n {
            return false;
        }
        let mut next = vec![usize::MAX; n];
        for &(s, t) in &self.arrows {
            if next[s] != usize::MAX {
                return false;
            }
            next[s] = t;
        }
        let mut seen = vec![false; n];
        let mut v = 0;
        for _ in 0..n {
            if seen[v] {
                return false;
            }
            seen[v] = true;
            v = next[v];
        }
        v == 0 && seen.iter().all(|&s| s)
    }

    /// True when some oriented cycle exists.
    pub fn has_oriented_cycle(&self) -> bool {
        let n = self.n_vertices();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        removed < n
    }
}

/// `⟨α,β⟩_a = Σ_i α_i β_i − Σ_{h: i→j} α_i β_j` over the given arrows.
pub(crate) fn euler_form_arrows(n: usize, arrows: &[(usize, usize)], a: &[i64], b: &[i64]) -> Result<i64> {
    if a.len() != n || b.len() != n {
        return domain(format!(
            "dimension vectors of length {} and {} for a quiver with {n} vertices",
            a.len(),
            b.len()
        ));
    }
    let diag: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let off: i64 = arrows.iter().map(|&(s, t)| a[s] * b[t]).sum();
    Ok(diag - off)
}

/// The additive Euler form of `Q`.
pub fn euler_form_add(q: &Quiver, alpha: &[i64], beta: &[i64]) -> Result<i64> {
    euler_form_arrows(q.n_vertices(), &q.arrows, alpha, beta)
}

/// On-disk quiver description.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub nilpotent: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowSpec {
    pub source: String,
    pub target: String,
}

/// What a spec file describes: an honest quiver, or the Jordan quiver (one
/// vertex with one loop), which is served by a dedicated backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedSpec {
    Quiver { quiver: Quiver, nilpotent: bool },
    Jordan,
}

impl QuiverSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| HallError::Parse(format!("quiver spec: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn parse(&self) -> Result<ParsedSpec> {
        let idx = |name: &str| {
            self.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| HallError::Parse(format!("arrow endpoint {name:?} is not a vertex")))
        };
        let mut arrows = Vec::new();
        for a in &self.arrows {
            arrows.push((idx(&a.source)?, idx(&a.target)?));
        }
        let is_jordan = self.vertices.len() == 1 && arrows == [(0, 0)];
        if is_jordan {
            if !self.nilpotent {
                return domain("the Jordan quiver is only supported with nilpotent = true");
            }
            return Ok(ParsedSpec::Jordan);
        }
        Ok(ParsedSpec::Quiver {
            quiver: Quiver::new(self.vertices.clone(), arrows)?,
            nilpotent: self.nilpotent,
        })
    }

    pub fn from_quiver(q: &Quiver, nilpotent: bool) -> Self {
        Self {
            vertices: q.names.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|&(s, t)| ArrowSpec {
                    source: q.names[s].clone(),
                    target: q.names[t].clone(),
                })
                .collect(),
            nilpotent,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_form_examples() {
        let a2 = Quiver::a2();
        assert_eq!(euler_form_add(&a2, &[1, 0], &[1, 0]).unwrap(), 1);
        assert_eq!(euler_form_add(&a2, &[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(euler_form_add(&a2, &[0, 1], &[1, 0]).unwrap(), 0);
        let k = Quiver::kronecker();
        assert_eq!(euler_form_add(&k, &[1, 0], &[0, 1]).unwrap(), -2);
        assert_eq!(k.cartan(0, 1), -2);
        assert_eq!(k.cartan(0, 0), 2);
        assert!(euler_form_add(&a2, &[1], &[1, 0]).is_err());
    }

    #[test]
    fn loops_rejected() {
        assert!(Quiver::new(vec!["a".into()], vec![(0, 0)]).is_err());
        assert!(Quiver::cyclic(1).is_err());
    }

    #[test]
    fn cycle_detection() {
        assert!(Quiver::cyclic(3).unwrap().is_oriented_cycle());
        assert!(Quiver::cyclic(2).unwrap().has_oriented_cycle());
        assert!(!Quiver::a2().is_oriented_cycle());
        assert!(!Quiver::kronecker().has_oriented_cycle());
    }

    #[test]
    fn spec_files() {
        let s = r#"{"vertices": ["1","2"], "arrows": [{"source":"1","target":"2"}], "nilpotent": false}"#;
        let spec = QuiverSpec::from_json(s).unwrap();
        assert_eq!(
            spec.parse().unwrap(),
            ParsedSpec::Quiver {
                quiver: Quiver::a2(),
                nilpotent: false
            }
        );
        let j = r#"{"vertices": ["x"], "arrows": [{"source":"x","target":"x"}], "nilpotent": true}"#;
        assert_eq!(QuiverSpec::from_json(j).unwrap().parse().unwrap(), ParsedSpec::Jordan);
        let bad = r#"{"vertices": ["1"], "arrows": [{"source":"1","target":"3"}]}"#;
        assert!(QuiverSpec::from_json(bad).unwrap().parse().is_err());
        let round = QuiverSpec::from_quiver(&Quiver::kronecker(), false);
        assert_eq!(QuiverSpec::from_json(&round.to_json()).unwrap(), round);
    }
}
