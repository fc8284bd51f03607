"""
Workspace - набор открытых документов с выбранным документом
"""

from .document import ProtocolDocument


class Workspace:
    """Упорядоченный список документов и индекс выбранного (-1 - нет выбора)"""

    def __init__(self):
        self.documents = []
        self.selected_index = -1

    def add_document(self, document):
        """
        Добавляет документ; первый добавленный документ становится выбранным

        Returns:
            int: Индекс добавленного документа
        """
        if not isinstance(document, ProtocolDocument):
            raise TypeError("Документ должен быть экземпляром ProtocolDocument")
        self.documents.append(document)
        if self.selected_index == -1:
            self.selected_index = len(self.documents) - 1
        return len(self.documents) - 1

    def remove_document(self, index):
        """
        Удаляет документ; выбор сдвигается на соседний документ

        Returns:
            bool: False, если индекс неверен
        """
        if not 0 <= index < len(self.documents):
            return False
        self.documents.pop(index)
        if self.selected_index == index:
            self.selected_index = min(index, len(self.documents) - 1)
        elif self.selected_index > index:
            self.selected_index -= 1
        return True

    def get_document(self, index):
        if 0 <= index < len(self.documents):
            return self.documents[index]
        return None

    def get_selected_document(self):
        return self.get_document(self.selected_index)

    def select_document(self, index):
        if 0 <= index < len(self.documents):
            self.selected_index = index
            return True
        return False

    def get_document_count(self):
        return len(self.documents)

    def get_document_names(self):
        return [document.name for document in self.documents]

    def clear(self):
        self.documents = []
        self.selected_index = -1

    def __str__(self):
        return f"Workspace(documents={len(self.documents)}, selected={self.selected_index})"

    def __repr__(self):
        return self.__str__()
