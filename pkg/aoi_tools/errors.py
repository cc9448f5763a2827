# ==================================================================== #
#  File name:      errors.py                    #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           14-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Exception types shared by    #  |#   #   $      #|  #
#                  the package and their CLI    #  |#   #   #      #|  #
#                  exit codes.                  #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  14-Sep-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Classes   #
# =========== #
class AoIToolsError(Exception):
    """
    Base class of every error raised on purpose by aoi_tools
    """

class ParameterError(AoIToolsError, ValueError):
    """
    A value lies outside the domain of the quantity it describes (probability out of range, non-integer period, unknown preset...)
    """

class ConfigParseError(ParameterError):
    """
    A configuration text could not be parsed, the line number is kept so the CLI can point at the culprit
    """

    def __init__(self, message:str, lineNumber:int=None):
        """
        __init__ Constructor

        :param message: What went wrong
        :type message: string
        :param lineNumber: 1-based line of the configuration text, None when the problem concerns the whole file, defaults to None
        :type lineNumber: integer, optional
        """
        self.lineNumber = lineNumber
        """ 1-based line number of the offending line or None """
        self.sMessage = message
        """ Message without the line prefix """

        if lineNumber is None:
            super().__init__(message)
        else:
            super().__init__(f"line {lineNumber}: {message}")

class ValidationError(AoIToolsError):
    """
    A constructed object breaks one of its structural guarantees, for example a cyclic schedule with colliding sources
    """

class ProtocolError(AoIToolsError):
    """
    A feedback observation cannot occur under the configured feedback mechanism
    """

class NumericError(AoIToolsError, ArithmeticError):
    """
    A numeric solver failed to reach its tolerance
    """

# =========== #
#   Methods   #
# =========== #
def exit_code_for(error:BaseException):
    """
    exit_code_for Map an exception to the exit code reported by the command line interface

    :param error: Exception that stopped the command
    :type error: BaseException
    :return: 2 for parse, parameter, validation and protocol problems, 3 for numeric failures, 1 otherwise
    :rtype: integer
    """
    if isinstance(error, NumericError):
        return 3
    elif isinstance(error, (ParameterError, ValidationError, ProtocolError)):
        return 2
    else:
        return 1
