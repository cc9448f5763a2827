# ==================================================================== #
#  File name:      splitting_tree.py            #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           22-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Splitting trees giving       #  |#   #   $      #|  #
#                  collision free offsets for   #  |#   #   #      #|  #
#                  reciprocal rates.            #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  22-Sep-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import logging
import math
from collections import Counter
from fractions import Fraction
from functools import reduce

from aoi_tools.errors import ParameterError

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

# =========== #
#   Classes   #
# =========== #
class SplittingTreeNode:
    """
    Node of weight 1/g. An internal node splits into prime-many children, child i hangs below an edge of weight i*g.
    """

    def __init__(self, g:int, offset:int, period:int=None):
        """
        __init__ Constructor

        :param g: Inverse of the node weight
        :type g: integer
        :param offset: Sum of the edge weights from the root to this node
        :type offset: integer
        :param period: Requested period served by this leaf, None for unused leaves and internal nodes, defaults to None
        :type period: integer, optional
        """
        self.g = g
        """ Inverse of the node weight """
        self.offset = offset
        """ Sum of the edge weights from the root """
        self.period = period
        """ Period of the demand placed on this leaf """
        self.prime = None
        """ Branching factor of an internal node """
        self.lChildren = list()
        """ Children ordered by edge weight """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        if self.is_leaf:
            return f"SplittingTreeNode(weight=1/{self.g}, offset={self.offset}, period={self.period})"
        return f"SplittingTreeNode(weight=1/{self.g}, offset={self.offset}, prime={self.prime}, children={len(self.lChildren)})"

    @property
    def weight(self):
        """ Exact node weight """
        return Fraction(1, self.g)

    @property
    def is_leaf(self):
        return not self.lChildren

    def edge_weight(self, childIndex:int):
        """ Weight of the edge towards a child """
        return childIndex * self.g

class SplittingTree:
    """
    Rooted splitting tree, the root has weight 1
    """

    def __init__(self, root:SplittingTreeNode):
        self.root = root
        """ Node of weight 1 """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"SplittingTree(leaves={len(self.leaves())}, used={len(self.used_leaves())})"

    def nodes(self):
        """
        nodes Every node in depth-first order, children by ascending edge weight

        :rtype: list[SplittingTreeNode]
        """
        lNodes, lStack = list(), [self.root]
        while lStack:
            node = lStack.pop()
            lNodes.append(node)
            lStack.extend(reversed(node.lChildren))
        return lNodes

    def leaves(self):
        """ All leaves, used or not """
        return [node for node in self.nodes() if node.is_leaf]

    def used_leaves(self):
        """ Leaves carrying a requested period """
        return [node for node in self.leaves() if node.period is not None]

# =========== #
#   Methods   #
# =========== #
def prime_factors(n:int):
    """
    prime_factors Prime factors of n with multiplicity, ascending

    :param n: Positive integer
    :type n: integer
    :rtype: list[integer]
    """
    lFactors, divisor = list(), 2
    while divisor * divisor <= n:
        while n % divisor == 0:
            lFactors.append(divisor)
            n //= divisor
        divisor += 1
    if n > 1:
        lFactors.append(n)
    return lFactors

def permutation_count(n:int):
    """ Number of distinct orderings of the prime factor multiset of n """
    dCounts = Counter(prime_factors(n))
    count = math.factorial(sum(dCounts.values()))
    for multiplicity in dCounts.values():
        count //= math.factorial(multiplicity)
    return count

def periods_from_rates(rates):
    """
    periods_from_rates Integer periods of exact rational rates

    :param rates: Rates, each the reciprocal of a positive integer
    :type rates: iterable[Fraction or int or str]
    :raises ParameterError: A rate is not the reciprocal of a positive integer
    :rtype: tuple[integer]
    """
    lPeriods = list()
    for rate in rates:
        rate = Fraction(rate)
        if rate <= 0 or rate.numerator != 1:
            raise ParameterError(f"rate {rate} is not the reciprocal of a positive integer")
        lPeriods.append(rate.denominator)
    return tuple(lPeriods)

def candidate_tree_bound(periods):
    """
    candidate_tree_bound Number of splitting trees to examine when factor orderings are enumerated per distinct period

    :param periods: Requested periods
    :type periods: iterable[integer]
    :rtype: integer
    """
    distinct = sorted(set(periods))
    common = reduce(math.gcd, distinct)
    return math.prod(permutation_count(period // common) for period in distinct)

def _child_placements(tPeriods:tuple, g:int, p:int):
    """
    _child_placements Every way to spread the demands of a node over its p children, up to swapping children
    or swapping identical demands

    :param tPeriods: Demands of the node, ascending
    :type tPeriods: tuple[integer]
    :param g: Inverse weight of the node
    :type g: integer
    :param p: Branching factor
    :type p: integer
    :return: Generator of p-tuples of child demand tuples
    :rtype: generator
    """
    childG = g * p
    capacity = Fraction(1, childG)
    lItems = [list() for _ in range(p)]
    lLoads = [Fraction(0)] * p
    lGcds = [0] * p
    lLocked = [False] * p
    lChoice = [0] * len(tPeriods)

    def place(position:int, used:int):
        if position == len(tPeriods):
            yield tuple(tuple(items) for items in lItems)
            return

        period = tPeriods[position]
        isLeaf = period == childG
        # Identical demands take non-decreasing children
        first = lChoice[position - 1] if position > 0 and tPeriods[position - 1] == period else 0
        for child in range(first, min(used + 1, p)):
            if lLocked[child] or (isLeaf and lItems[child]):
                continue
            if lLoads[child] + Fraction(1, period) > capacity:
                continue
            newGcd = math.gcd(lGcds[child], period // childG)
            if lItems[child] and newGcd == 1:
                continue

            # Place
            previous = (lLoads[child], lGcds[child], lLocked[child])
            lItems[child].append(period)
            lLoads[child] += Fraction(1, period)
            lGcds[child] = newGcd
            lLocked[child] = isLeaf
            lChoice[position] = child

            yield from place(position + 1, max(used, child + 1))

            # Undo
            lItems[child].pop()
            lLoads[child], lGcds[child], lLocked[child] = previous

    yield from place(0, 0)

def _solve(g:int, tPeriods:tuple, dMemo:dict):
    """
    _solve Shape of a subtree of weight 1/g serving the demands, None if impossible

    :return: None, ("empty",), ("leaf", period) or ("split", p, child shapes)
    :rtype: tuple or None
    """
    key = (g, tPeriods)
    if key in dMemo:
        return dMemo[key]

    if not tPeriods:
        shape = ("empty",)
    elif tPeriods == (g,):
        shape = ("leaf", g)
    elif g in tPeriods or sum(Fraction(1, period) for period in tPeriods) > Fraction(1, g):
        shape = None
    else:
        shape = None
        common = reduce(math.gcd, (period // g for period in tPeriods))
        for p in sorted(set(prime_factors(common))):
            logger.debug("node 1/%d: trying prime %d for %s", g, p, tPeriods)
            for tChildren in _child_placements(tPeriods, g, p):
                lShapes = list()
                for childPeriods in tChildren:
                    childShape = _solve(g * p, childPeriods, dMemo)
                    if childShape is None:
                        break
                    lShapes.append(childShape)
                else:
                    shape = ("split", p, tuple(lShapes))
                    break
            if shape is not None:
                break

    dMemo[key] = shape
    return shape

def _grow(shape:tuple, g:int, offset:int):
    """ Build the nodes of a solved shape """
    if shape[0] == "leaf":
        return SplittingTreeNode(g, offset, shape[1])
    node = SplittingTreeNode(g, offset)
    if shape[0] == "split":
        node.prime = shape[1]
        for index, childShape in enumerate(shape[2]):
            node.lChildren.append(_grow(childShape, g * node.prime, offset + node.edge_weight(index)))
    return node

def build_splitting_tree(rates):
    """
    build_splitting_tree Search a splitting tree whose leaves carry the requested rates.
    The search is exhaustive: it tries primes in ascending order at each node and every placement of the demands
    over the children, so None means no splitting tree serves these rates.

    :param rates: Requested rates, each the reciprocal of a positive integer
    :type rates: iterable[Fraction or int or str]
    :raises ParameterError: A rate is not the reciprocal of a positive integer
    :return: The tree or None
    :rtype: SplittingTree
    """
    tPeriods = tuple(sorted(periods_from_rates(rates)))
    if not tPeriods:
        raise ParameterError("at least one rate is needed")
    logger.debug("searching a splitting tree for periods %s, factor-ordering bound %d", tPeriods, candidate_tree_bound(tPeriods))

    if sum(Fraction(1, period) for period in tPeriods) > 1:
        logger.debug("rates sum above 1, no tree")
        return None

    shape = _solve(1, tPeriods, dict())
    if shape is None:
        logger.debug("no splitting tree for periods %s", tPeriods)
        return None
    return SplittingTree(_grow(shape, 1, 0))
