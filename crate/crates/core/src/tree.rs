//! Plane trees, their contour bijection with Łukasiewicz paths, thorn
//! statistics, and the mirror and lodestar-swap maps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::multiset::DegreeMultiset;
use crate::path::{LukasPath, Step};

/// Rooted tree with ordered children. A node without children is a leaf.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

/// Address of a node: 1-based child indices from the root.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodePath(pub Vec<usize>);

impl NodePath {
    pub fn root() -> Self {
        NodePath(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, index: usize) -> Self {
        let mut v = self.0.clone();
        v.push(index);
        NodePath(v)
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeThorns {
    pub lthorn: u64,
    pub rthorn: u64,
}

/// Thorn counts of every internal node in preorder, with their totals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThornStats {
    pub per_node: Vec<NodeThorns>,
    pub lthorn: u64,
    pub rthorn: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lodestars {
    pub left: NodePath,
    pub right: NodePath,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn node(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    /// Internal node whose `count` children are all leaves.
    pub fn star(count: usize) -> Self {
        PlaneTree::node(vec![PlaneTree::leaf(); count])
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.children.len()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::node_count).sum::<usize>()
    }

    fn is_lodestar(&self) -> bool {
        !self.is_leaf() && self.children.iter().all(PlaneTree::is_leaf)
    }

    /// Reads a path left to right, filling the leftmost empty bud each time:
    /// `U_k` makes an internal node with `k + 1` buds, `D` makes a leaf.
    pub fn from_path(path: &LukasPath) -> Self {
        // open internal nodes with the number of buds still empty
        let mut open: Vec<(PlaneTree, usize)> = Vec::new();
        let mut finished: Option<PlaneTree> = None;
        for &step in path.steps() {
            let mut done = match step {
                Step::Up(k) => {
                    open.push((PlaneTree::node(Vec::with_capacity(k as usize + 1)), k as usize + 1));
                    continue;
                }
                Step::Down => PlaneTree::leaf(),
            };
            // Attach completed subtrees upward until a node still has buds.
            loop {
                match open.last_mut() {
                    None => {
                        finished = Some(done);
                        break;
                    }
                    Some((node, buds)) => {
                        node.children.push(done);
                        *buds -= 1;
                        if *buds > 0 {
                            break;
                        }
                        done = open.pop().unwrap().0;
                    }
                }
            }
        }
        finished.expect("a valid path fills every bud")
    }

    /// Preorder transcription: a leaf gives `D`, a node with `k + 1`
    /// children gives `U_k`.
    pub fn to_path(&self) -> LukasPath {
        let mut steps = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            match node.degree() {
                0 => steps.push(Step::Down),
                d => steps.push(Step::Up(d as u32 - 1)),
            }
            stack.extend(node.children.iter().rev());
        }
        LukasPath::from_steps_unchecked(steps)
    }

    /// Internal nodes in preorder with their addresses.
    pub fn internal_nodes(&self) -> Vec<(NodePath, &PlaneTree)> {
        fn walk<'a>(node: &'a PlaneTree, at: NodePath, out: &mut Vec<(NodePath, &'a PlaneTree)>) {
            if node.is_leaf() {
                return;
            }
            out.push((at.clone(), node));
            for (i, child) in node.children.iter().enumerate() {
                walk(child, at.child(i + 1), out);
            }
        }
        let mut out = Vec::new();
        walk(self, NodePath::root(), &mut out);
        out
    }

    pub fn get(&self, at: &NodePath) -> Option<&PlaneTree> {
        at.0.iter()
            .try_fold(self, |node, &i| i.checked_sub(1).and_then(|i| node.children.get(i)))
    }

    pub fn get_mut(&mut self, at: &NodePath) -> Option<&mut PlaneTree> {
        let mut node = self;
        for &i in &at.0 {
            node = node.children.get_mut(i.checked_sub(1)?)?;
        }
        Some(node)
    }

    /// The `l`-th child of a node with `k` children gains `l - 1` left thorns
    /// and `k - l` right thorns over its parent.
    pub fn thorns(&self) -> ThornStats {
        fn walk(node: &PlaneTree, here: NodeThorns, out: &mut Vec<NodeThorns>) {
            if node.is_leaf() {
                return;
            }
            out.push(here);
            let k = node.degree() as u64;
            for (i, child) in node.children.iter().enumerate() {
                let l = i as u64 + 1;
                let next = NodeThorns {
                    lthorn: here.lthorn + l - 1,
                    rthorn: here.rthorn + k - l,
                };
                walk(child, next, out);
            }
        }
        let mut per_node = Vec::new();
        walk(self, NodeThorns::default(), &mut per_node);
        let lthorn = per_node.iter().map(|t| t.lthorn).sum();
        let rthorn = per_node.iter().map(|t| t.rthorn).sum();
        ThornStats { per_node, lthorn, rthorn }
    }

    /// Left-right reflection.
    pub fn mirror(&self) -> Self {
        PlaneTree::node(self.children.iter().rev().map(PlaneTree::mirror).collect())
    }

    /// First and last internal nodes (in preorder) whose children are all leaves.
    pub fn lodestars(&self) -> Option<Lodestars> {
        let mut found = self
            .internal_nodes()
            .into_iter()
            .filter(|(_, node)| node.is_lodestar())
            .map(|(at, _)| at);
        let left = found.next()?;
        let right = found.next_back().unwrap_or_else(|| left.clone());
        Some(Lodestars { left, right })
    }

    /// Exchanges the child counts of the left and right lodestars.
    pub fn lodestar_swap(&self) -> Self {
        let mut out = self.clone();
        if let Some(Lodestars { left, right }) = self.lodestars() {
            if left != right {
                let left_degree = self.get(&left).unwrap().degree();
                let right_degree = self.get(&right).unwrap().degree();
                *out.get_mut(&left).unwrap() = PlaneTree::star(right_degree);
                *out.get_mut(&right).unwrap() = PlaneTree::star(left_degree);
            }
        }
        out
    }

    /// Child counts of all internal nodes, root included.
    pub fn internal_degree_multiset(&self) -> DegreeMultiset {
        self.internal_nodes()
            .into_iter()
            .map(|(_, node)| node.degree() as u32)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trees serialize")
    }

    /// Accepts the parenthesis format or the nested JSON array format.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            return serde_json::from_str(trimmed).map_err(|e| Error::Tree(e.to_string()));
        }
        let bytes = trimmed.as_bytes();
        let mut pos = 0;
        let tree = parse_node(bytes, &mut pos)?;
        skip_spaces(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::Tree(format!("trailing input at byte {pos}")));
        }
        Ok(tree)
    }

    /// Every plane tree with exactly `nodes` nodes.
    pub fn all_with_nodes(nodes: usize) -> Vec<PlaneTree> {
        if nodes == 0 {
            return Vec::new();
        }
        forests(nodes - 1).into_iter().map(PlaneTree::node).collect()
    }
}

// All ordered forests with `nodes` nodes in total.
fn forests(nodes: usize) -> Vec<Vec<PlaneTree>> {
    if nodes == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=nodes {
        let heads = PlaneTree::all_with_nodes(first);
        let tails = forests(nodes - first);
        for head in &heads {
            for tail in &tails {
                let mut forest = Vec::with_capacity(tail.len() + 1);
                forest.push(head.clone());
                forest.extend(tail.iter().cloned());
                out.push(forest);
            }
        }
    }
    out
}

fn skip_spaces(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_node(bytes: &[u8], pos: &mut usize) -> Result<PlaneTree> {
    skip_spaces(bytes, pos);
    if bytes.get(*pos) != Some(&b'(') {
        return Err(Error::Tree(format!("expected '(' at byte {pos}")));
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        skip_spaces(bytes, pos);
        match bytes.get(*pos) {
            Some(b')') => {
                *pos += 1;
                return Ok(PlaneTree::node(children));
            }
            Some(b'(') => children.push(parse_node(bytes, pos)?),
            Some(&c) => return Err(Error::Tree(format!("unexpected {:?} at byte {pos}", c as char))),
            None => return Err(Error::Tree("unbalanced parentheses".into())),
        }
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, child) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{child}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PlaneTree::parse(s)
    }
}

impl Serialize for PlaneTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.children.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PlaneTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<PlaneTree>::deserialize(deserializer).map(PlaneTree::node)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> PlaneTree {
        PlaneTree::parse(text).unwrap()
    }

    fn p(text: &str) -> LukasPath {
        LukasPath::parse(text).unwrap()
    }

    #[test]
    fn text_and_json_formats() {
        let tree = t("((()) ())");
        assert_eq!(tree.to_string(), "((()) ())");
        assert_eq!(tree.to_json(), "[[[]],[]]");
        assert_eq!(PlaneTree::parse("[[[]],[]]").unwrap(), tree);
        assert_eq!(t(" ( (())()) "), tree);
        assert_eq!(t("()"), PlaneTree::leaf());
        for bad in ["", "(", "())", "(x)", "() ()", "[[]"] {
            assert!(PlaneTree::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn path_to_tree_examples() {
        assert_eq!(PlaneTree::from_path(&p("D")).to_string(), "()");
        assert_eq!(PlaneTree::from_path(&p("U1 U0 D D")).to_string(), "((()) ())");
        assert_eq!(
            PlaneTree::from_path(&p("U1 U2 D D D U0 D")).to_string(),
            "((() () ()) (()))"
        );
    }

    #[test]
    fn tree_to_path_examples() {
        assert_eq!(t("()").to_path().to_string(), "D");
        assert_eq!(t("((()) ())").to_path().to_string(), "U1 U0 D D");
        assert_eq!(t("(() (()))").to_path().to_string(), "U1 D U0 D");
    }

    #[test]
    fn thorn_examples() {
        let leaf = t("()").thorns();
        assert!(leaf.per_node.is_empty());
        assert_eq!((leaf.lthorn, leaf.rthorn), (0, 0));

        let stats = t("((()) ())").thorns();
        assert_eq!(
            stats.per_node,
            vec![NodeThorns { lthorn: 0, rthorn: 0 }, NodeThorns { lthorn: 0, rthorn: 1 }]
        );
        assert_eq!((stats.lthorn, stats.rthorn), (0, 1));

        let stats = t("((()) (() () ()))").thorns();
        assert_eq!((stats.lthorn, stats.rthorn), (1, 1));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(t("()").mirror(), t("()"));
        assert_eq!(t("((()) ())").mirror(), t("(() (()))"));
    }

    #[test]
    fn lodestar_examples() {
        assert_eq!(t("()").lodestars(), None);
        assert_eq!(
            t("(() ())").lodestars(),
            Some(Lodestars { left: NodePath::root(), right: NodePath::root() })
        );
        assert_eq!(
            t("((()) (() () ()))").lodestars(),
            Some(Lodestars { left: NodePath(vec![1]), right: NodePath(vec![2]) })
        );
        // left lodestar off the leftmost branch
        assert_eq!(
            t("(() ((()) ()) (()))").lodestars(),
            Some(Lodestars { left: NodePath(vec![2, 1]), right: NodePath(vec![3]) })
        );
    }

    #[test]
    fn swap_examples() {
        assert_eq!(t("(() ())").lodestar_swap(), t("(() ())"));
        assert_eq!(t("((()) (() () ()))").lodestar_swap(), t("((() () ()) (()))"));
        assert_eq!(t("()").lodestar_swap(), t("()"));
    }

    #[test]
    fn degree_multisets() {
        assert!(t("()").internal_degree_multiset().is_empty());
        assert_eq!(t("((()) ())").internal_degree_multiset().to_string(), "1:1,2:1");
        let path = p("U1 U0 D U2 D D D");
        assert_eq!(
            PlaneTree::from_path(&path).internal_degree_multiset(),
            path.profile_multiset().shifted(1)
        );
    }

    #[test]
    fn addressing() {
        let tree = t("((()) (() () ()))");
        assert_eq!(tree.get(&NodePath(vec![2])).unwrap().degree(), 3);
        assert_eq!(tree.get(&NodePath(vec![0])), None);
        assert_eq!(tree.get(&NodePath(vec![3])), None);
        assert_eq!(NodePath(vec![2, 1]).to_string(), "2.1");
        assert_eq!(NodePath::root().to_string(), "root");
    }

    #[test]
    fn tree_counts_are_catalan() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(PlaneTree::all_with_nodes(n + 1).len(), c);
        }
        assert!(PlaneTree::all_with_nodes(0).is_empty());
    }
}
