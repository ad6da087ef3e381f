"""Independent brute-force oracles, kept deliberately naive.

These re-derive expected values by direct per-case tree interpretation and
exhaustive enumeration; they share no code with the packed-bitmask kernels
they check.
"""

from timegp.trees import AND, INPUT_BASE, NAND, NOR, OR, Node


def eval_node(node: Node, inputs, counter=None) -> int:
    """Interpret one tree on one input assignment, counting node visits."""
    if counter is not None:
        counter[0] += 1
    if node.op >= INPUT_BASE:
        return inputs[node.op - INPUT_BASE]
    a = eval_node(node.children[0], inputs, counter)
    b = eval_node(node.children[1], inputs, counter)
    if node.op == AND:
        return a & b
    if node.op == OR:
        return a | b
    if node.op == NAND:
        return 1 - (a & b)
    if node.op == NOR:
        return 1 - (a | b)
    raise AssertionError(f"unknown op {node.op}")


def brute_fitness(tree: Node, num_bits: int, counter=None) -> int:
    """Count truth-table rows where the tree reproduces even parity."""
    correct = 0
    for c in range(1 << num_bits):
        inputs = [(c >> i) & 1 for i in range(num_bits)]
        target = 1 if bin(c).count("1") % 2 == 0 else 0
        if eval_node(tree, inputs, counter) == target:
            correct += 1
    return correct
