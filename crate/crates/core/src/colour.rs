//! Vertex and edge colourings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::SimpleGraph;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour {
    Black,
    White,
}

impl Colour {
    #[inline]
    pub fn flip(self) -> Colour {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Colour::Black => 'B',
            Colour::White => 'W',
        }
    }

    pub fn from_letter(c: char) -> Option<Colour> {
        match c {
            'B' | 'b' => Some(Colour::Black),
            'W' | 'w' => Some(Colour::White),
            _ => None,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A two-colouring of the vertices. Balance is not enforced here; the
/// verifiers report unbalanced colourings as failures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bisection {
    colours: Vec<Colour>,
}

impl Bisection {
    pub fn new(colours: Vec<Colour>) -> Self {
        Self { colours }
    }

    /// Colours the listed vertices black and the rest white.
    pub fn from_black(n: usize, black: &[usize]) -> Self {
        let mut colours = vec![Colour::White; n];
        for &v in black {
            colours[v] = Colour::Black;
        }
        Self { colours }
    }

    /// Parses a string of `B`/`W` letters.
    pub fn from_letters(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| Colour::from_letter(c).ok_or_else(|| invalid(format!("bad colour letter {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn letters(&self) -> String {
        self.colours.iter().map(|c| c.letter()).collect()
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    #[inline]
    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn set(&mut self, v: usize, c: Colour) {
        self.colours[v] = c;
    }

    pub fn class(&self, c: Colour) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.colours[v] == c).collect()
    }

    pub fn mask(&self, c: Colour) -> Vec<bool> {
        self.colours.iter().map(|&x| x == c).collect()
    }

    pub fn count(&self, c: Colour) -> usize {
        self.colours.iter().filter(|&&x| x == c).count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.count(Colour::Black) == self.len()
    }

    pub fn swapped(&self) -> Self {
        Self { colours: self.colours.iter().map(|c| c.flip()).collect() }
    }

    pub(crate) fn check_len(&self, g: &SimpleGraph) -> Result<()> {
        if self.len() != g.order() {
            return Err(invalid(format!("colouring has {} entries for {} vertices", self.len(), g.order())));
        }
        Ok(())
    }
}

/// A two-colouring of the edges, indexed like [`SimpleGraph::edges`].
/// `None` marks an uncoloured (removed) edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeTwoColouring {
    colours: Vec<Option<Colour>>,
}

impl EdgeTwoColouring {
    pub fn total(colours: Vec<Colour>) -> Self {
        Self { colours: colours.into_iter().map(Some).collect() }
    }

    pub fn partial(colours: Vec<Option<Colour>>) -> Self {
        Self { colours }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    #[inline]
    pub fn colour(&self, e: usize) -> Option<Colour> {
        self.colours[e]
    }

    pub fn colours(&self) -> &[Option<Colour>] {
        &self.colours
    }

    pub fn uncoloured(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.colours[e].is_none()).collect()
    }

    pub fn is_total(&self) -> bool {
        self.colours.iter().all(Option::is_some)
    }

    /// Edges of colour `c`.
    pub fn class(&self, c: Colour) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.colours[e] == Some(c)).collect()
    }

    pub fn swapped(&self) -> Self {
        Self { colours: self.colours.iter().map(|c| c.map(Colour::flip)).collect() }
    }

    /// One line per edge: `u v C`, with `-` for an uncoloured edge.
    pub fn to_edge_list(&self, g: &SimpleGraph) -> String {
        let mut out = String::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let c = self.colours[e].map_or('-', Colour::letter);
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        out
    }

    pub(crate) fn check_len(&self, g: &SimpleGraph) -> Result<()> {
        if self.len() != g.size() {
            return Err(invalid(format!("edge colouring has {} entries for {} edges", self.len(), g.size())));
        }
        Ok(())
    }
}

/// A proper 3-edge-colouring with colours `0..3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColouring3 {
    colours: Vec<u8>,
}

impl EdgeColouring3 {
    /// Wraps the colours after checking that they are in range and proper.
    pub fn new(g: &SimpleGraph, colours: Vec<u8>) -> Result<Self> {
        if colours.len() != g.size() {
            return Err(invalid(format!("edge colouring has {} entries for {} edges", colours.len(), g.size())));
        }
        if let Some(e) = colours.iter().position(|&c| c > 2) {
            return Err(invalid(format!("edge {e} has colour {} outside 0..3", colours[e])));
        }
        for v in 0..g.order() {
            let mut seen = [false; 3];
            for &w in g.neighbours(v) {
                let c = colours[g.edge_index(v, w).unwrap()] as usize;
                if seen[c] {
                    return Err(invalid(format!("two edges of colour {c} meet at vertex {v}")));
                }
                seen[c] = true;
            }
        }
        Ok(Self { colours })
    }

    #[inline]
    pub fn colour(&self, e: usize) -> u8 {
        self.colours[e]
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }
}
