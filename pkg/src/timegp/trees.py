"""Boolean program trees: representation, builders and subtree crossover.

A tree node carries an integer opcode.  Opcodes 0..3 are the binary
functions AND, OR, NAND, NOR; opcode ``INPUT_BASE + i`` is the terminal
reading input bit ``i``.  Every function node has exactly two children,
every terminal has none.
"""

from __future__ import annotations

import random

import numpy as np

from .errors import ConfigurationError

AND = 0
OR = 1
NAND = 2
NOR = 3
INPUT_BASE = 4

FUNCTION_OPS = (AND, OR, NAND, NOR)
FUNCTION_NAMES = {AND: "and", OR: "or", NAND: "nand", NOR: "nor"}


def input_op(i: int) -> int:
    """Opcode of the terminal reading input bit ``i``."""
    return INPUT_BASE + i


def is_function(op: int) -> bool:
    return op < INPUT_BASE


class Node:
    """A program-tree node. ``children`` is a list (empty for terminals)."""

    __slots__ = ("op", "children")

    def __init__(self, op: int, children=None):
        self.op = op
        self.children = children if children is not None else []

    def __repr__(self):
        return f"Node({format_tree(self)})"


def format_tree(root: Node) -> str:
    """S-expression rendering, e.g. ``(nand (and x0 x1) x2)``."""
    if not root.children:
        return f"x{root.op - INPUT_BASE}"
    inner = " ".join(format_tree(c) for c in root.children)
    return f"({FUNCTION_NAMES[root.op]} {inner})"


def copy_tree(root: Node) -> Node:
    """Deep copy without recursion (safe for deep trees)."""
    new_root = Node(root.op)
    stack = [(root, new_root)]
    while stack:
        src, dst = stack.pop()
        for child in src.children:
            new_child = Node(child.op)
            dst.children.append(new_child)
            stack.append((child, new_child))
    return new_root


def tree_size(root: Node) -> int:
    """Total node count (>= 1)."""
    count = 0
    stack = [root]
    while stack:
        node = stack.pop()
        count += 1
        stack.extend(node.children)
    return count


def tree_depth(root: Node) -> int:
    """Longest root-to-leaf path in edges; a single node has depth 0."""
    best = 0
    stack = [(root, 0)]
    while stack:
        node, d = stack.pop()
        if d > best:
            best = d
        for child in node.children:
            stack.append((child, d + 1))
    return best


def to_postfix(root: Node) -> np.ndarray:
    """Flatten to a postorder opcode array for the evaluation kernels."""
    rev = []
    stack = [root]
    while stack:
        node = stack.pop()
        rev.append(node.op)
        stack.extend(node.children)
    rev.reverse()
    return np.asarray(rev, dtype=np.int32)


def grow_tree(max_depth: int, num_bits: int, rng: random.Random) -> Node:
    """Koza 'grow': any primitive while budget remains, terminals at the limit."""
    n_prims = len(FUNCTION_OPS) + num_bits

    def build(budget):
        if budget == 0:
            return Node(input_op(rng.randrange(num_bits)))
        choice = rng.randrange(n_prims)
        if choice < len(FUNCTION_OPS):
            node = Node(FUNCTION_OPS[choice])
            node.children.append(build(budget - 1))
            node.children.append(build(budget - 1))
            return node
        return Node(input_op(choice - len(FUNCTION_OPS)))

    return build(max_depth)


def full_tree(depth: int, num_bits: int, rng: random.Random) -> Node:
    """Koza 'full': functions down to exactly ``depth``, then terminals."""

    def build(budget):
        if budget == 0:
            return Node(input_op(rng.randrange(num_bits)))
        node = Node(FUNCTION_OPS[rng.randrange(len(FUNCTION_OPS))])
        node.children.append(build(budget - 1))
        node.children.append(build(budget - 1))
        return node

    return build(depth)


def ramped_half_and_half(count: int, depth_range: tuple[int, int],
                         num_bits: int, rng: random.Random) -> list[Node]:
    """Standard ramped half-and-half initializer.

    Depths cycle across ``depth_range`` inclusive; even slots use grow,
    odd slots use full.
    """
    min_d, max_d = depth_range
    if count < 1:
        raise ConfigurationError(f"count must be >= 1, got {count}")
    if not (1 <= min_d <= max_d):
        raise ConfigurationError(f"bad depth range [{min_d}, {max_d}]")
    span = max_d - min_d + 1
    trees = []
    for i in range(count):
        depth = min_d + (i % span)
        if i % 2 == 0:
            trees.append(grow_tree(depth, num_bits, rng))
        else:
            trees.append(full_tree(depth, num_bits, rng))
    return trees


def _collect_points(root: Node):
    """Preorder list of (parent, child_index, node) with parent=None for root."""
    points = []
    stack = [(None, 0, root)]
    while stack:
        parent, idx, node = stack.pop()
        points.append((parent, idx, node))
        for i, child in enumerate(node.children):
            stack.append((node, i, child))
    return points


def _pick_point(points, rng: random.Random, internal_bias: float):
    internals = [p for p in points if p[2].children]
    leaves = [p for p in points if not p[2].children]
    if internals and rng.random() < internal_bias:
        pool = internals
    else:
        pool = leaves if leaves else internals
    return pool[rng.randrange(len(pool))]


def subtree_crossover(a: Node, b: Node, rng: random.Random,
                      max_depth: int = 17,
                      internal_bias: float = 0.9) -> tuple[Node, Node]:
    """Swap one subtree of each parent; over-deep children revert to a parent copy.

    Crossover points are biased toward internal nodes (Koza's 90/10 rule).
    """
    ca = copy_tree(a)
    cb = copy_tree(b)
    pa = _pick_point(_collect_points(ca), rng, internal_bias)
    pb = _pick_point(_collect_points(cb), rng, internal_bias)

    parent_a, idx_a, sub_a = pa
    parent_b, idx_b, sub_b = pb
    if parent_a is None:
        ca = sub_b
    else:
        parent_a.children[idx_a] = sub_b
    if parent_b is None:
        cb = sub_a
    else:
        parent_b.children[idx_b] = sub_a

    if tree_depth(ca) > max_depth:
        ca = copy_tree(a)
    if tree_depth(cb) > max_depth:
        cb = copy_tree(b)
    return ca, cb
