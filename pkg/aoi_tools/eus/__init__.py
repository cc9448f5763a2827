from aoi_tools.eus.splitting_tree import SplittingTree, SplittingTreeNode, build_splitting_tree, candidate_tree_bound, periods_from_rates, prime_factors
from aoi_tools.eus.cyclic_schedule import CyclicSchedule, admissible_periods, assign_leaves, check_eus_condition, collision_scan, design_eus, generate_schedule, is_divisible_rates, offsets_from_tree, schedule_from_periods, write_schedule_csv
