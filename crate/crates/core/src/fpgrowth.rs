//! FP-tree construction and FP-growth frequent itemset mining.
//!
//! Items are ordered by descending support, ties broken by ascending item
//! order (`T: Ord`). Mining encodes items as dense `u32` ids that preserve
//! that order, grows patterns over conditional trees, and decodes at the end.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};

pub type NodeId = usize;

const ROOT: NodeId = 0;

/// Largest item universe [`mine_bruteforce`] will enumerate.
pub const BRUTEFORCE_MAX_ITEMS: usize = 20;

/// Transactions with unique items each. Duplicates inside a transaction are
/// dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransactionDb<T> {
    transactions: Vec<Vec<T>>,
}

impl<T: Ord + Clone> TransactionDb<T> {
    pub fn new<I, J>(transactions: I) -> Self
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = T>,
    {
        let transactions = transactions
            .into_iter()
            .map(|t| {
                let mut seen = BTreeSet::new();
                t.into_iter().filter(|i| seen.insert(i.clone())).collect()
            })
            .collect();
        TransactionDb { transactions }
    }

    pub fn transactions(&self) -> &[Vec<T>] {
        &self.transactions
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// Distinct items across all transactions.
    pub fn items(&self) -> BTreeSet<&T> {
        self.transactions.iter().flatten().collect()
    }

    /// Number of transactions containing every item of `itemset`.
    pub fn support(&self, itemset: &[T]) -> u32 {
        self.transactions
            .iter()
            .filter(|t| itemset.iter().all(|i| t.contains(i)))
            .count() as u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpNode {
    /// Index into the header table; `None` for the root.
    item: Option<usize>,
    count: u32,
    parent: Option<NodeId>,
    // sorted by header index
    children: Vec<NodeId>,
    node_link: Option<NodeId>,
}

impl FpNode {
    pub fn header_index(&self) -> Option<usize> {
        self.item
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn parent(&self) -> Option<NodeId> {
        self.parent
    }

    pub fn children(&self) -> &[NodeId] {
        &self.children
    }

    /// Next node carrying the same item.
    pub fn node_link(&self) -> Option<NodeId> {
        self.node_link
    }

    pub fn is_root(&self) -> bool {
        self.item.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeaderEntry<T> {
    item: T,
    support: u32,
    head: Option<NodeId>,
    tail: Option<NodeId>,
}

impl<T> HeaderEntry<T> {
    pub fn item(&self) -> &T {
        &self.item
    }

    pub fn support(&self) -> u32 {
        self.support
    }

    /// First node of the item's node-link chain.
    pub fn head(&self) -> Option<NodeId> {
        self.head
    }
}

/// A frequent-pattern tree. Node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpTree<T> {
    nodes: Vec<FpNode>,
    header: Vec<HeaderEntry<T>>,
    index: BTreeMap<T, usize>,
}

impl<T: Ord + Clone> FpTree<T> {
    /// Builds the tree of `db` keeping items with support of at least `min_sup`.
    pub fn build(db: &TransactionDb<T>, min_sup: u32) -> Result<Self> {
        if min_sup == 0 {
            return Err(Error::ZeroMinSupport);
        }
        Ok(Self::from_weighted(
            db.transactions().iter().map(|t| (t.as_slice(), 1)),
            min_sup,
        ))
    }

    /// Builds a tree from weighted item paths, as used for conditional
    /// pattern bases. Paths must not repeat items.
    fn from_weighted<'a, I>(paths: I, min_sup: u32) -> Self
    where
        I: IntoIterator<Item = (&'a [T], u32)> + Clone,
        T: 'a,
    {
        let mut support: BTreeMap<&T, u32> = BTreeMap::new();
        for (path, weight) in paths.clone() {
            for item in path {
                *support.entry(item).or_insert(0) += weight;
            }
        }
        let mut frequent: Vec<(&T, u32)> =
            support.into_iter().filter(|&(_, s)| s >= min_sup).collect();
        // BTreeMap iteration is item-ascending and the sort is stable, so
        // equal supports stay in item order.
        frequent.sort_by_key(|f| core::cmp::Reverse(f.1));

        let header: Vec<HeaderEntry<T>> = frequent
            .iter()
            .map(|&(item, support)| HeaderEntry {
                item: item.clone(),
                support,
                head: None,
                tail: None,
            })
            .collect();
        let index = header
            .iter()
            .enumerate()
            .map(|(i, h)| (h.item.clone(), i))
            .collect();
        let mut tree = FpTree {
            nodes: alloc::vec![root_node()],
            header,
            index,
        };

        let mut ranks = Vec::new();
        for (path, weight) in paths {
            ranks.clear();
            ranks.extend(path.iter().filter_map(|i| tree.index.get(i).copied()));
            ranks.sort_unstable();
            tree.insert(&ranks, weight);
        }
        tree
    }

    fn insert(&mut self, ranks: &[usize], weight: u32) {
        let mut current = ROOT;
        for &rank in ranks {
            let found = self.nodes[current]
                .children
                .binary_search_by_key(&Some(rank), |&c| self.nodes[c].item);
            current = match found {
                Ok(pos) => {
                    let child = self.nodes[current].children[pos];
                    self.nodes[child].count += weight;
                    child
                }
                Err(pos) => {
                    let id = self.nodes.len();
                    self.nodes.push(FpNode {
                        item: Some(rank),
                        count: weight,
                        parent: Some(current),
                        children: Vec::new(),
                        node_link: None,
                    });
                    self.nodes[current].children.insert(pos, id);
                    let entry = &mut self.header[rank];
                    match entry.tail {
                        Some(tail) => self.nodes[tail].node_link = Some(id),
                        None => entry.head = Some(id),
                    }
                    entry.tail = Some(id);
                    id
                }
            };
        }
    }

    pub fn root(&self) -> NodeId {
        ROOT
    }

    pub fn node(&self, id: NodeId) -> &FpNode {
        &self.nodes[id]
    }

    /// Item carried by a node; `None` for the root.
    pub fn item(&self, id: NodeId) -> Option<&T> {
        self.nodes[id].item.map(|r| &self.header[r].item)
    }

    /// Header table in item order (descending support).
    pub fn header(&self) -> &[HeaderEntry<T>] {
        &self.header
    }

    pub fn item_order(&self) -> impl Iterator<Item = &T> + '_ {
        self.header.iter().map(|h| &h.item)
    }

    pub fn support(&self, item: &T) -> Option<u32> {
        self.index.get(item).map(|&r| self.header[r].support)
    }

    /// Nodes of `item` following the node-link chain.
    pub fn chain(&self, item: &T) -> Chain<'_> {
        let next = self.index.get(item).and_then(|&r| self.header[r].head);
        Chain {
            nodes: &self.nodes,
            next,
        }
    }

    fn chain_of(&self, rank: usize) -> Chain<'_> {
        Chain {
            nodes: &self.nodes,
            next: self.header[rank].head,
        }
    }

    /// Number of nodes, not counting the root.
    pub fn node_count(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.len() == 1
    }

    /// Items from just below the root down to `id`, inclusive.
    pub fn path_to(&self, id: NodeId) -> Vec<&T> {
        let mut path = Vec::new();
        let mut cur = Some(id);
        while let Some(n) = cur {
            if let Some(item) = self.item(n) {
                path.push(item);
            }
            cur = self.nodes[n].parent;
        }
        path.reverse();
        path
    }

    /// Header ranks strictly between `id` and `stop`, nearest-to-`stop` first.
    fn prefix_ranks(&self, id: NodeId, stop: NodeId) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.nodes[id].parent;
        while let Some(n) = cur {
            if n == stop {
                break;
            }
            out.extend(self.nodes[n].item);
            cur = self.nodes[n].parent;
        }
        out.reverse();
        out
    }

    /// The non-branching chain hanging off the root, top down.
    fn single_prefix_path(&self) -> Vec<NodeId> {
        let mut chain = Vec::new();
        let mut cur = ROOT;
        while let [only] = self.nodes[cur].children[..] {
            chain.push(only);
            cur = only;
        }
        chain
    }
}

fn root_node() -> FpNode {
    FpNode {
        item: None,
        count: 0,
        parent: None,
        children: Vec::new(),
        node_link: None,
    }
}

/// Iterator over a node-link chain.
pub struct Chain<'a> {
    nodes: &'a [FpNode],
    next: Option<NodeId>,
}

impl Iterator for Chain<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        let id = self.next?;
        self.next = self.nodes[id].node_link;
        Some(id)
    }
}

pub fn build_fp_tree<T: Ord + Clone>(db: &TransactionDb<T>, min_sup: u32) -> Result<FpTree<T>> {
    FpTree::build(db, min_sup)
}

/// Indented text rendering: `ROOT`, then one `item:count` line per node,
/// two spaces per depth level, children in item order. No trailing newline.
pub fn dump_tree<T: Ord + Clone + fmt::Display>(tree: &FpTree<T>) -> String {
    fn walk<T: Ord + Clone + fmt::Display>(
        tree: &FpTree<T>,
        id: NodeId,
        depth: usize,
        out: &mut String,
    ) {
        for &child in tree.node(id).children() {
            let item = tree.item(child).expect("non-root");
            let _ = write!(
                out,
                "\n{:width$}{}:{}",
                "",
                item,
                tree.node(child).count(),
                width = 2 * depth
            );
            walk(tree, child, depth + 1, out);
        }
    }
    let mut out = String::from("ROOT");
    walk(tree, ROOT, 1, &mut out);
    out
}

impl<T: Ord + Clone + fmt::Display> FpTree<T> {
    pub fn dump(&self) -> String {
        dump_tree(self)
    }
}

/// A mined itemset; `items` ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrequentItemset<T> {
    pub items: Vec<T>,
    pub support: u32,
}

impl<T: Ord> FrequentItemset<T> {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl<T: Ord> PartialOrd for FrequentItemset<T> {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by size, then items, then support.
impl<T: Ord> Ord for FrequentItemset<T> {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.items.len(), &self.items, self.support).cmp(&(
            other.items.len(),
            &other.items,
            other.support,
        ))
    }
}

/// FP-growth configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Miner {
    pub min_sup: u32,
    /// Smallest itemset size reported; 0 and 1 both mean "all".
    pub min_size: usize,
    /// Enumerate a tree's single prefix path directly instead of recursing.
    pub single_path: bool,
}

impl Miner {
    pub fn new(min_sup: u32) -> Self {
        Miner {
            min_sup,
            min_size: 1,
            single_path: true,
        }
    }

    pub fn min_size(mut self, min_size: usize) -> Self {
        self.min_size = min_size;
        self
    }

    pub fn single_path(mut self, enabled: bool) -> Self {
        self.single_path = enabled;
        self
    }

    /// All itemsets with support >= `min_sup` and at least `min_size`
    /// items, in canonical order.
    pub fn mine<T: Ord + Clone>(&self, db: &TransactionDb<T>) -> Result<Vec<FrequentItemset<T>>> {
        if self.min_sup == 0 {
            return Err(Error::ZeroMinSupport);
        }
        let universe: Vec<&T> = db.items().into_iter().collect();
        let encoded: Vec<Vec<u32>> = db
            .transactions()
            .iter()
            .map(|t| {
                t.iter()
                    .map(|i| universe.binary_search(&i).expect("item in universe") as u32)
                    .collect()
            })
            .collect();
        let tree = FpTree::from_weighted(encoded.iter().map(|t| (t.as_slice(), 1)), self.min_sup);

        let mut raw = Vec::new();
        self.grow(&tree, &mut raw);

        let min_size = self.min_size.max(1);
        let mut out: Vec<FrequentItemset<T>> = raw
            .into_iter()
            .filter(|(items, _)| items.len() >= min_size)
            .map(|(ids, support)| {
                let mut items: Vec<T> = ids
                    .iter()
                    .map(|&id| universe[id as usize].clone())
                    .collect();
                items.sort();
                FrequentItemset { items, support }
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Patterns of `tree`, without the suffix the tree is conditioned on.
    fn grow(&self, tree: &FpTree<u32>, out: &mut Vec<(Vec<u32>, u32)>) {
        let prefix = if self.single_path {
            tree.single_prefix_path()
        } else {
            Vec::new()
        };
        let Some(&boundary) = prefix.last() else {
            let all: Vec<usize> = (0..tree.header.len()).collect();
            self.grow_items(tree, ROOT, &all, out);
            return;
        };

        let path_patterns = path_combinations(tree, &prefix);
        let in_path: BTreeSet<usize> = prefix.iter().filter_map(|&n| tree.nodes[n].item).collect();
        let rest: Vec<usize> = (0..tree.header.len())
            .filter(|r| !in_path.contains(r))
            .collect();
        let mut branch_patterns = Vec::new();
        self.grow_items(tree, boundary, &rest, &mut branch_patterns);

        for (q, q_sup) in &branch_patterns {
            for (p, p_sup) in &path_patterns {
                let mut items = p.clone();
                items.extend_from_slice(q);
                out.push((items, (*p_sup).min(*q_sup)));
            }
        }
        out.extend(path_patterns);
        out.extend(branch_patterns);
    }

    /// One pattern per item in `ranks`, grown through its conditional tree.
    /// Conditional pattern bases stop at `boundary`.
    fn grow_items(
        &self,
        tree: &FpTree<u32>,
        boundary: NodeId,
        ranks: &[usize],
        out: &mut Vec<(Vec<u32>, u32)>,
    ) {
        for &rank in ranks.iter().rev() {
            let item = tree.header[rank].item;
            let support: u32 = tree.chain_of(rank).map(|n| tree.nodes[n].count).sum();
            out.push((alloc::vec![item], support));

            let base: Vec<(Vec<u32>, u32)> = tree
                .chain_of(rank)
                .map(|n| {
                    let path = tree
                        .prefix_ranks(n, boundary)
                        .into_iter()
                        .map(|r| tree.header[r].item)
                        .collect();
                    (path, tree.nodes[n].count)
                })
                .filter(|(path, _): &(Vec<u32>, u32)| !path.is_empty())
                .collect();
            let conditional =
                FpTree::from_weighted(base.iter().map(|(p, w)| (p.as_slice(), *w)), self.min_sup);
            if conditional.is_empty() {
                continue;
            }
            let mut grown = Vec::new();
            self.grow(&conditional, &mut grown);
            for (mut items, sup) in grown {
                items.push(item);
                out.push((items, sup));
            }
        }
    }
}

/// Every non-empty combination of nodes on a single path; support is the
/// smallest count among the chosen nodes.
fn path_combinations(tree: &FpTree<u32>, path: &[NodeId]) -> Vec<(Vec<u32>, u32)> {
    let mut out: Vec<(Vec<u32>, u32)> = Vec::new();
    for &node in path {
        let item = tree.item(node).copied().expect("non-root");
        let count = tree.nodes[node].count;
        let extended: Vec<_> = out
            .iter()
            .map(|(items, sup)| {
                let mut items = items.clone();
                items.push(item);
                (items, (*sup).min(count))
            })
            .collect();
        out.push((alloc::vec![item], count));
        out.extend(extended);
    }
    out
}

pub fn mine_frequent_itemsets<T: Ord + Clone>(
    db: &TransactionDb<T>,
    min_sup: u32,
    min_size: usize,
) -> Result<Vec<FrequentItemset<T>>> {
    Miner::new(min_sup).min_size(min_size).mine(db)
}

/// Exhaustive subset enumeration, for checking [`Miner`]. Refuses item
/// universes larger than [`BRUTEFORCE_MAX_ITEMS`].
pub fn mine_bruteforce<T: Ord + Clone>(
    db: &TransactionDb<T>,
    min_sup: u32,
    min_size: usize,
) -> Result<Vec<FrequentItemset<T>>> {
    if min_sup == 0 {
        return Err(Error::ZeroMinSupport);
    }
    let universe: Vec<&T> = db.items().into_iter().collect();
    if universe.len() > BRUTEFORCE_MAX_ITEMS {
        return Err(Error::UniverseTooLarge {
            items: universe.len(),
            max: BRUTEFORCE_MAX_ITEMS,
        });
    }
    let masks: Vec<u32> = db
        .transactions()
        .iter()
        .map(|t| {
            t.iter().fold(0u32, |m, i| {
                m | 1 << universe.binary_search(&i).expect("item in universe")
            })
        })
        .collect();
    let min_size = min_size.max(1);
    let mut out = Vec::new();
    for subset in 1u32..(1u32 << universe.len()) {
        if (subset.count_ones() as usize) < min_size {
            continue;
        }
        let support = masks.iter().filter(|&&m| m & subset == subset).count() as u32;
        if support >= min_sup {
            let items = (0..universe.len())
                .filter(|b| subset & (1 << b) != 0)
                .map(|b| universe[b].clone())
                .collect();
            out.push(FrequentItemset { items, support });
        }
    }
    out.sort();
    Ok(out)
}
