import yaml
import yaml.scanner


class ConfigLoaderException(Exception):
    """
    Base exception for ConfigLoader.

    This exception serves as the parent class for all YAML file-related errors,
    covering both the harness settings file and scenario documents. It provides
    a unified exception hierarchy for issues encountered during loading and parsing.
    """


class ConfigFileNotFoundError(ConfigLoaderException):
    """
    Raised when a YAML file is not found.

    Attributes:
        file_path: str
            The path to the file that was not found.
    """

    def __init__(self, file_path: str):
        """
        Initializes the ConfigFileNotFoundError with the missing file path.

        :param file_path: str
            The path to the file that could not be found.
        """
        super().__init__(f"File not found: {file_path}")
        self.file_path = file_path


class ConfigFileFormatError(ConfigLoaderException):
    """
    Raised when a YAML file cannot be parsed into a mapping.

    This exception is raised if the file exists but contains syntax errors,
    is empty, or its top level is not a key/value mapping.

    Attributes:
        file_path: str
            The path to the file.
        error: Exception | str
            The original exception raised by the YAML parser, or a description
            of the structural problem.
    """

    def __init__(self, file_path: str, error):
        """
        Initializes the ConfigFileFormatError with file path and parsing error.

        :param file_path: str
            The path to the file.
        :param error: Exception | str
            The exception raised during YAML parsing or a short description.
        """
        super().__init__(f"Invalid YAML format in file {file_path}: {error}")
        self.file_path = file_path
        self.error = error


class ConfigLoader:
    """
    A utility class to load and parse YAML documents.

    Used for `config/harness.yaml`, scenario files and sweep grid files.
    """

    @staticmethod
    def load_config(file_path: str) -> dict:
        """
        Loads a YAML document whose top level is a mapping.

        :param file_path: str
            Path to the YAML file.
        :return: dict
            The parsed document.
        :raises ConfigFileNotFoundError: If the file does not exist.
        :raises ConfigFileFormatError: If the YAML is invalid, empty or not a mapping.
        :raises ConfigLoaderException: For unexpected errors during file loading.

        Algorithm:
        1. Attempt to open the specified file as UTF-8.
        2. Parse the file using yaml.safe_load().
        3. Reject documents that do not decode to a dict.

        Edge Cases:
        - Missing file raises ConfigFileNotFoundError
          (inside: Algorithm p. 1).
        - Invalid YAML syntax raises ConfigFileFormatError
          (inside: Algorithm p. 2).
        - An empty file or a top-level list/scalar raises ConfigFileFormatError
          (inside: Algorithm p. 3).
        """
        try:
            with open(file_path, "r", encoding="utf-8") as file:
                data = yaml.safe_load(file)
        except FileNotFoundError:
            raise ConfigFileNotFoundError(file_path)
        except (yaml.YAMLError, yaml.scanner.ScannerError) as e:
            raise ConfigFileFormatError(file_path, e)
        except Exception as e:
            raise ConfigLoaderException(
                f"Unexpected error loading file {file_path}: {e}"
            )

        if not isinstance(data, dict):
            raise ConfigFileFormatError(
                file_path, f"expected a mapping at top level, got {type(data).__name__}"
            )
        return data
