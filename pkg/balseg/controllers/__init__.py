from .output_controller import OutputRecord, OutputController, controller

__all__ = ['OutputRecord', 'OutputController', 'controller']
