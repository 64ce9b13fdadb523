//! Quivers with vertex decorations.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::matrix::SkewMatrix;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexId {
    Index(usize),
    Grid { col: usize, row: usize },
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Index(i) => write!(f, "{i}"),
            VertexId::Grid { col, row } => write!(f, "{col},{row}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Open,
    Filled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Color>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: VertexId,
    pub to: VertexId,
    pub mult: u64,
}

/// A quiver without loops or 2-cycles. Vertex order fixes the matrix indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    index: BTreeMap<VertexId, usize>,
    arrows: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self, Error> {
        let mut index = BTreeMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.id, k).is_some() {
                return Err(Error::Shape(format!("duplicate vertex {}", v.id)));
            }
        }
        Ok(Quiver {
            vertices,
            index,
            arrows: BTreeMap::new(),
        })
    }

    /// Plain quiver on `0..n` without decorations.
    pub fn undecorated(n: usize) -> Self {
        let vs = (0..n)
            .map(|i| Vertex {
                id: VertexId::Index(i),
                color: None,
                sign: None,
            })
            .collect();
        Quiver::new(vs).expect("distinct ids")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, id: VertexId) -> Result<usize, Error> {
        self.index.get(&id).copied().ok_or(Error::UnknownVertex(id.to_string()))
    }

    /// Adds `mult` arrows `from -> to`, cancelling against opposite arrows.
    pub fn add_arrows(&mut self, from: VertexId, to: VertexId, mult: u64) -> Result<(), Error> {
        let a = self.position(from)?;
        let b = self.position(to)?;
        if a == b {
            return Err(Error::Loop(from.to_string()));
        }
        let cur = self.arrow_count(a, b) as i128 - self.arrow_count(b, a) as i128 + mult as i128;
        self.arrows.remove(&(a, b));
        self.arrows.remove(&(b, a));
        if cur > 0 {
            self.arrows.insert((a, b), cur as u64);
        } else if cur < 0 {
            self.arrows.insert((b, a), (-cur) as u64);
        }
        Ok(())
    }

    fn arrow_count(&self, a: usize, b: usize) -> u64 {
        self.arrows.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        self.arrows
            .iter()
            .map(|(&(a, b), &m)| Arrow {
                from: self.vertices[a].id,
                to: self.vertices[b].id,
                mult: m,
            })
            .collect()
    }

    /// `B_ij` = number of arrows `i -> j` minus arrows `j -> i`.
    pub fn to_matrix(&self) -> Result<SkewMatrix, Error> {
        let mut b = SkewMatrix::zero(self.len());
        for (&(a, c), &m) in &self.arrows {
            let m = i64::try_from(m).map_err(|_| Error::Overflow)?;
            b.set_pair(a, c, m);
        }
        Ok(b)
    }

    /// Same vertices and decorations, arrows read off `b`.
    pub fn with_matrix(&self, b: &SkewMatrix) -> Result<Self, Error> {
        if b.size() != self.len() {
            return Err(Error::Shape(format!("matrix size {} for {} vertices", b.size(), self.len())));
        }
        let mut q = Quiver {
            vertices: self.vertices.clone(),
            index: self.index.clone(),
            arrows: BTreeMap::new(),
        };
        for i in 0..b.size() {
            for j in 0..b.size() {
                if b.get(i, j) > 0 {
                    q.arrows.insert((i, j), b.get(i, j) as u64);
                }
            }
        }
        Ok(q)
    }

    pub fn mutate(&self, k: VertexId) -> Result<Self, Error> {
        let kk = self.position(k)?;
        self.with_matrix(&self.to_matrix()?.mutate(kk)?)
    }

    pub fn to_json(&self) -> String {
        let j = QuiverJson {
            vertices: self.vertices.clone(),
            arrows: self.arrows(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let j: QuiverJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut q = Quiver::new(j.vertices)?;
        for a in j.arrows {
            if q.arrow_count(q.position(a.to)?, q.position(a.from)?) > 0 {
                return Err(Error::TwoCycle(a.from.to_string(), a.to.to_string()));
            }
            q.add_arrows(a.from, a.to, a.mult)?;
        }
        Ok(q)
    }
}

pub fn mutate_quiver(q: &Quiver, k: VertexId) -> Result<Quiver, Error> {
    q.mutate(k)
}
