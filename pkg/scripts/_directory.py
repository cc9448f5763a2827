import os

PROJECT_NAME = "aoi_tools"
MAIN_DIRECTORY = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))
PROJECT_DIRECTORY = os.path.join(MAIN_DIRECTORY, PROJECT_NAME)
RESULTS_DIRECTORY = os.path.join(MAIN_DIRECTORY, "results")
